# Copyright 2026 The occupancy-schur Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Serialization of reports for the command line front end.

Every report exposes ``to_dict()``; distributions also expose
``csv_rows()`` giving ``(k, probability)`` pairs.
"""

import csv
import enum
import io
import json
import logging
import math

import numpy as np

from occupancy_schur.errors import InvalidConfiguration

LOG = logging.getLogger(__name__)


class ReportFormatter(object):
    """Interface for classes that turn a report into text."""

    def transform_value(self, value):
        """Transform a leaf value into something the output format can hold.
        """
        raise NotImplementedError

    def format_report(self, report):
        """Format a report for output."""
        raise NotImplementedError


class JsonFormatter(ReportFormatter):
    """JSON with Python float repr, which round-trips every double.
    """

    def transform_value(self, value):
        if isinstance(value, dict):
            return dict((k, self.transform_value(v)) for k, v in value.items())
        elif isinstance(value, (list, tuple, np.ndarray)):
            return [self.transform_value(v) for v in value]
        elif isinstance(value, (bool, np.bool_)):
            return bool(value)
        elif isinstance(value, (int, np.integer)):
            return int(value)
        elif isinstance(value, (float, np.floating)):
            value = float(value)
            if math.isnan(value) or math.isinf(value):
                # JSON has no representation for these
                return str(value)
            return value
        elif isinstance(value, enum.Enum):
            return value.value
        elif value is None or isinstance(value, str):
            return value
        return str(value)

    def format_report(self, report):
        return json.dumps(self.transform_value(report.to_dict()), indent=2) + "\n"


def _flatten(prefix, value, out):
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten("%s.%s" % (prefix, key) if prefix else key, item, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for index, item in enumerate(value):
            _flatten("%s.%d" % (prefix, index), item, out)
    else:
        out.append((prefix, value))
    return out


class TextFormatter(ReportFormatter):
    """Shared leaf handling for the csv and table formats."""

    def transform_value(self, value):
        if isinstance(value, (list, tuple, np.ndarray)):
            return ";".join(self.transform_value(v) for v in value)
        elif isinstance(value, (float, np.floating)):
            return repr(float(value))
        elif isinstance(value, enum.Enum):
            return value.value
        elif value is None:
            return ""
        return str(value)

    def rows(self, report):
        if hasattr(report, "csv_rows"):
            return [("k", "probability")] + [
                (str(k), self.transform_value(prob)) for k, prob in report.csv_rows()
            ]
        pairs = _flatten("", JsonFormatter().transform_value(report.to_dict()), [])
        return [("key", "value")] + [(key, self.transform_value(v)) for key, v in pairs]


class CsvFormatter(TextFormatter):

    def format_report(self, report):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(self.rows(report))
        return buf.getvalue()


class TableFormatter(TextFormatter):
    """Aligned two-column text for people; distributions get a summary
    header followed by the pmf."""

    def format_report(self, report):
        lines = []
        if hasattr(report, "csv_rows"):
            summary = dict(report.to_dict())
            summary.pop("pmf", None)
            summary.pop("counts", None)
            lines.extend(self._align(_flatten("", summary, [])))
            lines.append("")
        lines.extend(self._align(self.rows(report)))
        return "\n".join(lines) + "\n"

    def _align(self, pairs):
        pairs = [(key, self.transform_value(v) if not isinstance(v, str) else v) for key, v in pairs]
        width = max(len(key) for key, _ in pairs) if pairs else 0
        return ["%s  %s" % (key.ljust(width), value) for key, value in pairs]


FORMATTERS = {
    "json": JsonFormatter,
    "csv": CsvFormatter,
    "table": TableFormatter,
}


def get_formatter(name):
    try:
        return FORMATTERS[name]()
    except KeyError:
        raise InvalidConfiguration(
            "format must be one of %s, not %r" % (", ".join(sorted(FORMATTERS)), name)
        )


class ScalarReport(object):
    """A report holding named scalar results, e.g. an expectation."""

    def __init__(self, **values):
        self.values = values

    def to_dict(self):
        return dict(self.values)
