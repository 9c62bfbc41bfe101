"""
Sweep output
CSV and JSON renderings of sweep records
"""

import csv
import io
import json
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .spec import SweepRecord, SweepSpec

CSV_HEADER = [
    "ka",
    "mu0",
    "statistics",
    "sigma_over_sigma0",
    "sigma_k2_over_4pi",
    "channels",
    "residual",
    "degenerate",
]


def _number(value: float) -> str:
    # shortest round-trip decimal
    return repr(float(value))


def format_csv(records: Sequence[SweepRecord], comments: Optional[List[str]] = None) -> str:
    """Render records as CSV, preceded by optional '# ' comment lines"""
    buffer = io.StringIO()
    for comment in comments or []:
        buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow(
            [
                _number(record.ka),
                _number(record.mu0),
                record.statistics.value,
                _number(record.sigma_normalized),
                _number(record.sigma_raw),
                str(record.channels_used),
                _number(record.convergence_residual),
                "true" if record.degenerate_flag else "false",
            ]
        )
    return buffer.getvalue()


def _record_dict(record: SweepRecord) -> Dict[str, Any]:
    data = record.model_dump()
    data["statistics"] = record.statistics.value
    # NaN and infinities are not JSON
    for key, value in data.items():
        if isinstance(value, float) and not math.isfinite(value):
            data[key] = None
    return data


def format_json(records: Sequence[SweepRecord], spec: Optional[SweepSpec] = None) -> str:
    """Render records, and the spec that produced them, as a JSON document"""
    document: Dict[str, Any] = {"records": [_record_dict(record) for record in records]}
    if spec is not None:
        document = {"spec": json.loads(spec.model_dump_json()), **document}
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def write_text(text: str, path: Path):
    """Write output with a fixed newline convention"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(text)
