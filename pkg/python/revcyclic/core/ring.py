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
"""Exact arithmetic in Z2, Z4 and the sixteen element rings R_theta = Z4 + vZ4 with v^2 = theta.

Elements of R_theta are stored in the (1, v) basis. Internally every R_theta also carries the
distinguished element k_theta and the constant c with k_theta^2 = c * k_theta, which is what the
code modules use to embed R_theta^n into Z4^(2n).
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Iterator, List, NamedTuple, Tuple

import numpy as np

__all__ = [
    'ChainRingError',
    'ElementError',
    'InvalidComplementPairError',
    'FiniteRing',
    'IntegersMod',
    'Z2',
    'Z4',
    'RTheta',
    'ThetaParam',
    'NON_CHAIN_THETAS',
    'ComplementPair',
    'mul',
    'phi_theta',
    'complement',
    'enumerate_complement_pairs',
    'all_thetas',
]


class ChainRingError(ValueError):
    """Raised when v^2 is one of the eight values that make Z4 + vZ4 a chain ring."""


class ElementError(ValueError):
    """Raised for values that are not elements of the ring they are used with."""


class InvalidComplementPairError(ValueError):
    """Raised when a complement pair violates u^2 = 1 or u * t = t."""


class RTheta(NamedTuple):
    a: int
    b: int

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        v = 'v' if self.b == 1 else '{}*v'.format(self.b)
        if self.a == 0:
            return v
        return '{}+{}'.format(self.a, v)


RTheta.__doc__ = '''An element a + b*v of Z4 + vZ4 in the (1, v) basis.'''
RTheta.a.__doc__ = "int: the Z4 coordinate of 1"
RTheta.b.__doc__ = "int: the Z4 coordinate of v"


def _element(value: Any) -> RTheta:
    if isinstance(value, RTheta):
        return value
    if isinstance(value, (int, np.integer)):
        return RTheta(int(value) % 4, 0)
    try:
        a, b = value
    except (TypeError, ValueError):
        raise ElementError('Not an element of Z4 + vZ4: {!r}'.format(value))
    if not all(isinstance(x, (int, np.integer)) and 0 <= x < 4 for x in (a, b)):
        raise ElementError('Coordinates must be integers in 0..3: {!r}'.format(value))
    return RTheta(int(a), int(b))


class FiniteRing(ABC):
    """The coefficient rings used by polynomials: Z2, Z4 and R_theta."""

    @property
    @abstractmethod
    def zero(self) -> Any:
        ...

    @property
    @abstractmethod
    def one(self) -> Any:
        ...

    @abstractmethod
    def add(self, x, y):
        ...

    @abstractmethod
    def neg(self, x):
        ...

    @abstractmethod
    def mul(self, x, y):
        ...

    @abstractmethod
    def from_int(self, i: int):
        """The image of an integer under the unique ring map Z -> R."""
        ...

    @abstractmethod
    def elements(self) -> List[Any]:
        ...

    @abstractmethod
    def to_json(self, x) -> Any:
        ...

    @abstractmethod
    def from_json(self, obj) -> Any:
        ...

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def is_zero(self, x) -> bool:
        return x == self.zero

    def inverse(self, x):
        for y in self.elements():
            if self.mul(x, y) == self.one:
                return y
        raise ZeroDivisionError('{} is not a unit'.format(x))

    def is_unit(self, x) -> bool:
        return any(self.mul(x, y) == self.one for y in self.elements())

    def format(self, x) -> str:
        return str(x)


class IntegersMod(FiniteRing):
    """Z/mZ for m in {2, 4}, with elements stored as python ints in 0..m-1."""

    def __init__(self, modulus: int):
        if modulus not in (2, 4):
            raise ValueError('Only Z2 and Z4 are supported, got Z{}'.format(modulus))
        self.modulus = modulus

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.modulus == self.modulus

    def __hash__(self):
        return hash(('IntegersMod', self.modulus))

    def __repr__(self):
        return 'Z{}'.format(self.modulus)

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, x, y):
        return (x + y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def mul(self, x, y):
        return x * y % self.modulus

    def from_int(self, i: int):
        return int(i) % self.modulus

    def elements(self) -> List[int]:
        return list(range(self.modulus))

    def to_json(self, x) -> int:
        return int(x)

    def from_json(self, obj) -> int:
        if not isinstance(obj, int) or isinstance(obj, bool) or not 0 <= obj < self.modulus:
            raise ElementError('Not an element of {!r}: {!r}'.format(self, obj))
        return obj


Z2 = IntegersMod(2)
Z4 = IntegersMod(4)

NON_CHAIN_THETAS = (RTheta(0, 0), RTheta(0, 1), RTheta(0, 2), RTheta(0, 3),
                    RTheta(1, 0), RTheta(3, 2), RTheta(2, 1), RTheta(2, 3))

_K_THETA = {
    RTheta(0, 0): RTheta(0, 1),
    RTheta(0, 1): RTheta(0, 1),
    RTheta(0, 2): RTheta(0, 1),
    RTheta(0, 3): RTheta(0, 1),
    RTheta(1, 0): RTheta(1, 1),
    RTheta(3, 2): RTheta(1, 1),
    RTheta(2, 1): RTheta(2, 1),
    RTheta(2, 3): RTheta(2, 1),
}


def _index(x: RTheta) -> int:
    return 4 * x.a + x.b


_ELEMENTS = [RTheta(a, b) for a in range(4) for b in range(4)]


class ThetaParam(FiniteRing):
    """The ring R_theta = Z4 + vZ4 with v^2 = theta for one of the eight non-chain values of theta.

    Attributes
    ----------
    theta : RTheta
        the value of v^2.
    k_theta : RTheta
        the element generating the kernel of phi_theta: v, 1+v or 2+v.
    c : int
        the Z4 constant with k_theta^2 = c * k_theta.

    """

    def __init__(self, theta):
        theta = _element(theta)
        if theta not in _K_THETA:
            raise ChainRingError(
                'non-chain θ required: v^2 = {} makes Z4 + vZ4 a chain ring'.format(theta)
            )
        self.theta = theta
        self.k_theta = _K_THETA[theta]
        table = np.zeros((16, 16), dtype=np.int8)
        for x in _ELEMENTS:
            for y in _ELEMENTS:
                table[_index(x), _index(y)] = _index(self._expand(x, y))
        self._table = table
        k_squared = self.mul(self.k_theta, self.k_theta)
        k0, c = self.to_k(k_squared)
        assert k0 == 0, 'k_theta^2 must lie in k_theta * Z4'
        self.c = c

    def _expand(self, x: RTheta, y: RTheta) -> RTheta:
        # (a + bv)(c + dv) = ac + (ad + bc)v + bd * theta
        bd = x.b * y.b
        return RTheta((x.a * y.a + bd * self.theta.a) % 4,
                      (x.a * y.b + x.b * y.a + bd * self.theta.b) % 4)

    def __eq__(self, other):
        return isinstance(other, ThetaParam) and other.theta == self.theta

    def __hash__(self):
        return hash(('ThetaParam', self.theta))

    def __repr__(self):
        return 'ThetaParam({})'.format(self.theta)

    def __str__(self):
        return str(self.theta)

    @property
    def zero(self) -> RTheta:
        return RTheta(0, 0)

    @property
    def one(self) -> RTheta:
        return RTheta(1, 0)

    @property
    def v(self) -> RTheta:
        return RTheta(0, 1)

    def add(self, x, y):
        return RTheta((x.a + y.a) % 4, (x.b + y.b) % 4)

    def neg(self, x):
        return RTheta(-x.a % 4, -x.b % 4)

    def mul(self, x, y):
        return _ELEMENTS[self._table[_index(x), _index(y)]]

    def from_int(self, i: int):
        return RTheta(int(i) % 4, 0)

    def elements(self) -> List[RTheta]:
        return list(_ELEMENTS)

    def units(self) -> List[RTheta]:
        return [x for x in _ELEMENTS if self.is_unit(x)]

    def to_json(self, x) -> List[int]:
        return [x.a, x.b]

    def from_json(self, obj) -> RTheta:
        if not isinstance(obj, list) or len(obj) != 2:
            raise ElementError('Element JSON must be a pair [a, b]: {!r}'.format(obj))
        return _element(tuple(obj))

    def phi(self, x: RTheta) -> int:
        """The image of x in Z4 = R_theta / <k_theta>."""
        return (x.a - self.k_theta.a * x.b) % 4

    def to_k(self, x: RTheta) -> Tuple[int, int]:
        """Coordinates (x0, x1) with x = x0 + x1 * k_theta."""
        return (x.a - self.k_theta.a * x.b) % 4, x.b

    def from_k(self, x0: int, x1: int) -> RTheta:
        return RTheta((x0 + self.k_theta.a * x1) % 4, x1 % 4)

    def mul_matrix(self, u: RTheta) -> np.ndarray:
        """The Z4 matrix of multiplication by u acting on column vectors (x0, x1)."""
        u0, u1 = self.to_k(u)
        return np.array([[u0, 0], [u1, (u0 + self.c * u1) % 4]], dtype=np.int64)


def mul(x: RTheta, y: RTheta, theta: ThetaParam) -> RTheta:
    return theta.mul(x, y)


def phi_theta(x: RTheta, theta: ThetaParam) -> int:
    return theta.phi(x)


@dataclass(frozen=True)
class ComplementPair:
    """A pair (u, t) defining the complement a -> u^-1 (t - a) in R_theta.

    Since u^2 = 1 the unit u is its own inverse.
    """
    theta: ThetaParam
    u: RTheta
    t: RTheta

    def __post_init__(self):
        ring = self.theta
        if ring.mul(self.u, self.u) != ring.one:
            raise InvalidComplementPairError('u = {} does not satisfy u^2 = 1 in R_{}'
                                             .format(self.u, ring))
        if ring.mul(self.u, self.t) != self.t:
            raise InvalidComplementPairError('(u, t) = ({}, {}) does not satisfy u*t = t in R_{}'
                                             .format(self.u, self.t, ring))

    @property
    def u_inverse(self) -> RTheta:
        return self.u

    @property
    def zero_complement(self) -> RTheta:
        """The complement of 0, u^-1 t."""
        return self.theta.mul(self.u, self.t)

    def __str__(self):
        return '({}, {})'.format(self.u, self.t)

    def to_json(self):
        return {'u': self.theta.to_json(self.u), 't': self.theta.to_json(self.t)}


def complement(x: RTheta, cp: ComplementPair) -> RTheta:
    ring = cp.theta
    return ring.mul(cp.u_inverse, ring.sub(cp.t, x))


def enumerate_complement_pairs(theta: ThetaParam) -> List[ComplementPair]:
    pairs = []
    for u in _ELEMENTS:
        if theta.mul(u, u) != theta.one:
            continue
        for t in _ELEMENTS:
            if theta.mul(u, t) == t:
                pairs.append(ComplementPair(theta, u, t))
    return pairs


def all_thetas() -> Iterator[ThetaParam]:
    for theta in NON_CHAIN_THETAS:
        yield ThetaParam(theta)
