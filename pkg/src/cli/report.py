"""
Report emission in text, JSON and CSV.

Every report starts with one `# generated <timestamp> v<version>` line;
everything after it depends only on the run configuration and the inputs.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Optional

from ..core.formatting import format_complex
from ..core.paths import atomic_write_text
from ..stickelberger import RelationReport, Verdict
from .runner import CurveResult, RunResult

CSV_HEADER = "M;char_id;A_chi;B_chi;residual"


def header_line(version: str) -> str:
    return f"# generated {datetime.now().isoformat(timespec='seconds')} v{version}"


def strip_header(text: str) -> str:
    """Report body without the timestamp line."""
    if text.startswith("# generated"):
        return text.split("\n", 1)[1] if "\n" in text else ""
    return text


def read_json_report(text: str) -> dict:
    return json.loads(strip_header(text))


def _tag(report: RelationReport) -> str:
    if report.verdict is Verdict.NOT_APPLICABLE:
        return "n/a"
    if report.verdict is Verdict.FAILED:
        return "FAIL" if report.hard else "WARN"
    return "PASS"


def _describe(report: RelationReport) -> str:
    keys = ("prime", "layer", "bound", "ring", "ord")
    params = " ".join(f"{k}={report.params[k]}" for k in keys if k in report.params)
    parts = [f"[{_tag(report)}]", report.name]
    if params:
        parts.append(params)
    parts.append(f"({report.verdict.value}")
    if report.orientation is not None:
        parts[-1] += f", orientation {report.orientation:+d}"
    parts[-1] += ")"
    if report.detail:
        parts.append(f"- {report.detail}")
    return " ".join(parts)


def _curve_heading(cr: CurveResult) -> str:
    rank = "?" if cr.curve.rank_hint is None else cr.curve.rank_hint
    line = f"{cr.curve.name} (N={cr.curve.conductor}, rank {rank})"
    if cr.eps is not None:
        line += f" eps_N={cr.eps:+d}"
    if cr.period_map is not None:
        line += f" map={cr.period_map.fingerprint}"
    return line


def _ord_line(mr) -> str:
    bound = mr.theta.s_m_size
    report = next((r for r in mr.reports if r.name == "vanishing-bound"), None)
    verdict = "PASS" if report is not None and report.passed else "FAIL"
    return f"ord>={bound}: {verdict} (|S_M|={bound}) ord_Z={mr.ord}"


def render_text(result: RunResult) -> str:
    cfg = result.config
    lines = []
    if result.pinning:
        for name, pin in result.orientations.items():
            lines.append(f"orientation {name}: {pin['orientation']:+d} (pinned by {pin['pinned_by']})")
        for report in result.pinning:
            if report.hard_failure:
                lines.append(f"pinning {_describe(report)}")

    for cr in result.curves:
        if cfg.verb == "dump-space":
            lines.append(cr.space_dump.rstrip("\n") if cr.space_dump else f"{cr.curve.name}: {cr.error}")
            continue
        lines.append(_curve_heading(cr))
        if cr.error:
            lines.append(f"  error: {cr.error}")
        for report in cr.reports:
            lines.append(f"  {_describe(report)}")

        for mr in cr.moduli:
            if mr.error:
                lines.append(f"  M={mr.modulus}: error: {mr.error}")
                continue
            if cfg.verb == "theta":
                lines.append(f"  {mr.theta.dump()}")
            elif cfg.verb == "ord":
                lines.append(f"  M={mr.modulus}: {_ord_line(mr)}")
            else:
                lines.append(f"  M={mr.modulus}: {mr.theta.dump()}")
                if mr.ord is not None:
                    lines.append(f"    {_ord_line(mr)}")
                for report in mr.reports:
                    lines.append(f"    {_describe(report)}")

        if cr.special is not None:
            lines.extend(_special_lines(cr))
        for row in cr.lvalues:
            name = "L(E, 1)" if row.modulus == 1 else f"L(E, {row.char_id} mod {row.modulus}, 1)"
            lines.append(f"  {name} = {format_complex(row.value)}")

    if cfg.verb in ("verify", "ord", "theta", "special"):
        lines.append(f"hard failures: {result.hard_failures}, advisory warnings: {result.advisory_failures}")
    return "\n".join(lines) + "\n"


def _special_lines(cr: CurveResult) -> list[str]:
    sv = cr.special
    lines = [f"  special values ({'PASS' if sv.passed else 'FAIL'}): pairing {sv.pairing_name}"]
    if sv.c is not None:
        src = f" from M={sv.fitted_from[0]} {sv.fitted_from[1]}" if sv.fitted_from else ""
        lines.append(f"    c = {format_complex(sv.c)}{src}, spread {sv.c_spread:.2e}")
    lines.append(f"    max residual {sv.max_residual:.2e}")
    pairing = sv.pairing or 0
    for row in sv.rows:
        lines.append(
            f"    {row.modulus}; {row.char_id}; {format_complex(row.a_value)}; "
            f"{format_complex(row.b(pairing))}; {row.residual:.2e}"
        )
    return lines


def render_json(result: RunResult) -> str:
    return json.dumps(result.to_dict(), indent=2) + "\n"


def render_csv(result: RunResult) -> str:
    """Special-values table: M;char_id;A_chi;B_chi;residual."""
    lines = [CSV_HEADER]
    for cr in result.curves:
        if cr.special is None:
            continue
        pairing = cr.special.pairing or 0
        for row in cr.special.rows:
            lines.append(
                f"{row.modulus};{cr.curve.name}:{row.char_id};{format_complex(row.a_value)};"
                f"{format_complex(row.b(pairing))};{row.residual:.3e}"
            )
    return "\n".join(lines) + "\n"


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(result: RunResult, version: str) -> str:
    body = RENDERERS[result.config.output_format](result)
    return f"{header_line(version)}\n{body}"


def emit(result: RunResult, version: str, output_path: Optional[Path] = None) -> str:
    """Render and either print or write atomically to output_path."""
    text = render(result, version)
    if output_path is not None:
        atomic_write_text(output_path, text)
    else:
        print(text, end="")
    return text
