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
"""Row output shared by the command line tools."""
import csv
import json
from typing import Any, Mapping, Sequence, TextIO

FORMATS = ('json', 'csv')


def yes_no(value) -> str:
    if value is None:
        return ''
    return 'Yes' if value else 'No'


def write_rows(rows: Sequence[Mapping[str, Any]], columns: Sequence[str], fmt: str, out: TextIO):
    """Writes rows as CSV with a header line, or as a JSON array of objects."""
    if fmt == 'csv':
        writer = csv.DictWriter(out, fieldnames=list(columns), extrasaction='ignore',
                                lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({k: yes_no(v) if isinstance(v, bool) else v for k, v in row.items()})
    elif fmt == 'json':
        json.dump([{k: row.get(k) for k in columns} for row in rows], out, indent=2)
        out.write('\n')
    else:
        raise ValueError('Unknown output format: {}'.format(fmt))
