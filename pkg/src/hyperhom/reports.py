"""Machine-readable reports.

Field order is fixed by construction and rendering is deterministic, so a
repeated invocation produces byte-identical output.  Barcodes additionally
export as CSV with `inf` as the open-death sentinel.
"""

from __future__ import annotations

import json

SCHEMA_VERSION = 1
ENGINE = "hyperhom"
ENGINE_VERSION = "0.1.0"


def build_report(command: str, coefficients=None, results=None, warnings=None) -> dict:
    report = {
        "schema": SCHEMA_VERSION,
        "engine": f"{ENGINE} {ENGINE_VERSION}",
        "command": command,
    }
    if coefficients is not None:
        report["coefficients"] = str(coefficients)
    report["results"] = results if results is not None else {}
    report["warnings"] = list(warnings or [])
    return report


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False, ensure_ascii=True) + "\n"


def render_text(report: dict) -> str:
    lines = [f"# {report['command']}"]
    if "coefficients" in report:
        lines.append(f"coefficients: {report['coefficients']}")
    lines.extend(_text_block(report["results"], indent=0))
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def _text_block(value, indent):
    pad = "  " * indent
    out = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_text_block(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_flat(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{pad}-")
                out.extend(_text_block(v, indent + 1))
            else:
                out.append(f"{pad}- {_flat(v)}")
    else:
        out.append(f"{pad}{_flat(value)}")
    return out


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _flat(v):
    if isinstance(v, list):
        return "[" + ", ".join(str(x) for x in v) + "]"
    return str(v)


def barcode_rows(barcodes) -> list[dict]:
    rows = []
    for bc in barcodes:
        for bar in sorted(bc.bars, key=lambda b: (b.birth, b.death if b.death is not None else float("inf"))):
            rows.append(
                {
                    "degree": bc.degree,
                    "birth": bar.birth,
                    "death": "inf" if bar.death is None else bar.death,
                    "multiplicity": bar.multiplicity,
                }
            )
    return rows


def barcode_csv(barcodes, value_of=None) -> str:
    lines = ["degree,birth,death,multiplicity"]
    for row in barcode_rows(barcodes):
        birth = value_of(row["birth"]) if value_of else row["birth"]
        death = row["death"]
        if death != "inf" and value_of:
            death = value_of(death)
        lines.append(f"{row['degree']},{birth},{death},{row['multiplicity']}")
    return "\n".join(lines) + "\n"


def group_str(groups) -> list[str]:
    return [str(g) for g in groups]
