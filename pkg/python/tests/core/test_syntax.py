#  Copyright 2020 Regents of the University of Minnesota.
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
import pytest

from revcyclic.core.polynomials import Poly
from revcyclic.core.ring import ChainRingError, RTheta, ThetaParam, Z2, Z4
from revcyclic.core.syntax import ParseError, parse_binary, parse_element, parse_poly, parse_theta


def test_parse_z4_poly():
    assert parse_poly('3*z^3 + 1*z + 2', Z4) == Poly(Z4, [2, 1, 0, 3])
    assert parse_poly('z-1', Z4) == Poly(Z4, [3, 1])
    assert parse_poly('2*(z^2+1)', Z4) == Poly(Z4, [2, 0, 2])
    assert parse_poly('-z', Z4) == Poly(Z4, [0, 3])


def test_parse_theta_poly():
    theta = ThetaParam(RTheta(2, 1))
    p = parse_poly('(2+v)*(z^2+z+1)', theta)
    assert p == Poly(theta, [RTheta(2, 1)] * 3)
    assert parse_poly('ν*ν', theta) == Poly(theta, [RTheta(2, 1)])


def test_parse_element():
    theta = ThetaParam(0)
    assert parse_element('2+3*v', theta) == RTheta(2, 3)
    assert parse_element('0', theta) == RTheta(0, 0)
    with pytest.raises(ParseError):
        parse_element('z', theta)


@pytest.mark.parametrize('text, expected', [
    ('0', (0, 0)),
    ('v', (0, 1)),
    ('2*v', (0, 2)),
    ('3v', None),
    ('ν', (0, 1)),
    ('1', (1, 0)),
    ('3+2*v', (3, 2)),
    ('2+v', (2, 1)),
    ('2+3*v', (2, 3)),
])
def test_parse_theta(text, expected):
    if expected is None:
        with pytest.raises(ParseError):
            parse_theta(text)
    else:
        assert parse_theta(text).theta == RTheta(*expected)


def test_parse_chain_theta():
    with pytest.raises(ChainRingError):
        parse_theta('2')
    with pytest.raises(ChainRingError):
        parse_theta('1+v')


def test_parse_binary():
    assert parse_binary('z^2+1') == Poly(Z2, [1, 0, 1])
    with pytest.raises(ParseError):
        parse_binary('z^2+2')


def test_error_position():
    with pytest.raises(ParseError) as exc_info:
        parse_poly('z+#', Z4)
    assert exc_info.value.position == 2


@pytest.mark.parametrize('text', ['', '(z+1', 'z^', 'z+', '1 2'])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_poly(text, Z4)


def test_v_outside_theta_ring():
    with pytest.raises(ParseError):
        parse_poly('v', Z4)
