from rich.console import Console, Group, RenderableType
from rich.panel import Panel
from rich.table import Table

from transcert.arith.complex import BallComplex
from transcert.arith.real import BallReal
from transcert.arith.region import Rect
from transcert.certify.model import Certificate, CheckStatus, Verdict
from transcert.constants import GMPY2_VERSION, TRANSCERT_VERSION
from transcert.model.output import DigitsOutput, DigitTable, StatsReport
from transcert.rootfind.model import RootEnclosure

STATUS_COLORS = {
    CheckStatus.PASS: "green",
    CheckStatus.FAIL: "red",
    CheckStatus.UNDECIDED: "yellow",
}
VERDICT_COLORS = {
    Verdict.CERTIFIED: "green",
    Verdict.REFUSED: "red",
    Verdict.UNDECIDED: "yellow",
}


def _subtitle() -> str:
    return f"transcert {TRANSCERT_VERSION} gmpy2 {GMPY2_VERSION}"


def _value_rows(table: Table, value: BallReal | BallComplex) -> None:
    if isinstance(value, BallComplex):
        table.add_row("re", str(value.re))
        table.add_row("im", str(value.im))
    else:
        table.add_row("value", str(value))


def render_roots(
    console: Console,
    roots: list[RootEnclosure],
    source: str | None = None,
    avoided: list[Rect] | None = None,
) -> None:
    """Renders located roots as a table (canonical order, index matching --root-index)"""
    table = Table(title=source, title_justify="left", expand=True)
    table.add_column("#", style="b")
    table.add_column("re")
    table.add_column("im")
    table.add_column("proof")
    table.add_column("prec", justify="right")
    table.add_column("branch")
    for idx, root in enumerate(roots):
        z = root.as_complex()
        table.add_row(
            str(idx),
            str(z.re),
            str(z.im),
            str(root.uniqueness_proof),
            str(root.prec_used),
            root.branch or "",
        )

    if not roots:
        console.print(f"[yellow]No roots found{f' for {source}' if source else ''}[/yellow]")
    else:
        console.print(table)

    if avoided:
        console.print(f"[yellow]Skipped {len(avoided)} region(s) meeting a branch cut:[/yellow]")
        for rect in avoided:
            console.print(f"  {rect}", highlight=False)


def render_certificate(console: Console, certificate: Certificate) -> None:
    """Renders a certificate ledger (and any input certificates it depends on) as a panel"""
    color = VERDICT_COLORS[certificate.verdict]
    panel_items: list[RenderableType] = [""]
    if certificate.equation_text:
        panel_items.append(f"[b]Equation:[/b] {certificate.equation_text}")
    if certificate.subject:
        panel_items.append(f"[b]Number:[/b] {certificate.subject}")
    if certificate.form is not None:
        panel_items.append(f"[b]Form:[/b] {certificate.form.kind}")
    panel_items.append(f"[b]Theorem:[/b] {certificate.theorem or '-'}")
    panel_items.append("")

    values = Table(show_header=False, expand=True)
    values.add_column(style="b")
    values.add_column()
    if certificate.root is not None:
        _value_rows(values, certificate.root.box)
        values.add_row("proof", str(certificate.root.uniqueness_proof))
    if certificate.value is not None:
        _value_rows(values, certificate.value)
    if values.row_count:
        panel_items.append(values)

    checks = Table(title="Hypotheses", title_justify="left", expand=True)
    checks.add_column("check")
    checks.add_column("status")
    checks.add_column("witness prec", justify="right")
    checks.add_column("detail")
    for check in certificate.checks:
        checks.add_row(
            check.name,
            f"[{STATUS_COLORS[check.status]}]{check.status}[/{STATUS_COLORS[check.status]}]",
            "" if check.witness_prec is None else str(check.witness_prec),
            check.detail or "",
        )
    panel_items.append(checks)

    if certificate.note:
        panel_items.append(f"[i]{certificate.note}[/i]")

    verdict = f"[{color} b]{certificate.verdict}[/{color} b]"
    if certificate.reason:
        verdict += f" ({certificate.reason})"
    elif certificate.verdict == Verdict.UNDECIDED:
        verdict += f" (gave up at {certificate.witness_prec} bits)"
    panel_items.extend(["", verdict])

    for certificate_input in certificate.inputs:
        render_certificate(console, certificate_input)

    console.print(
        Panel(
            Group(*panel_items),
            title=f"[{color}]{certificate.verdict}[/{color}]",
            border_style=color,
            expand=False,
            subtitle=_subtitle(),
        )
    )


def render_digits(console: Console, output: DigitsOutput) -> None:
    console.print(output.to_text(), highlight=False, soft_wrap=True)


def render_table(console: Console, table: DigitTable) -> None:
    """Plain groups of digits (space separated cells, one row per line)"""
    console.print(table.to_text(), highlight=False)


def render_stats(console: Console, report: StatsReport) -> None:
    table = Table(title=f"{report.digit_count} base {report.base} digits", title_justify="left", expand=True)
    table.add_column("statistic", style="b")
    table.add_column("value", justify="right")
    table.add_column("df", justify="right")
    table.add_column("z", justify="right")
    table.add_column("p-value", justify="right")
    table.add_column("note")
    for result in report.results:
        table.add_row(
            str(result.name),
            f"{result.statistic:.6g}",
            "" if result.df is None else str(result.df),
            "" if result.z is None else f"{result.z:.6g}",
            f"{result.p_value:.6g}",
            result.note or "",
        )
    console.print(table)
    console.print("[i]Diagnostics only - no randomness or security claim is made.[/i]")
