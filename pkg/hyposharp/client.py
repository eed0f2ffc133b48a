"""
hyposharp CLI

This module provides a command-line interface to the hypoplactic toolkit:
tableaux and equivalence of ranked words, the tropical representations, and
identity checking by characterization or by exhaustive search in the finite
models.

Exit status: 0 on success, 1 when ``check`` or ``oracle`` refutes the
identity, 2 on any input error.
"""

from contextlib import contextmanager
from typing import Iterator, List, Optional

import typer

from hyposharp import __version__
from hyposharp.checker import (
    BASES,
    CheckerFactory,
    basis_identities,
    build_pk,
    build_qk,
    chaos,
    check,
    find_critical,
    in_Pk,
    in_Qk,
)
from hyposharp.errors import HyposharpError, describe
from hyposharp.hypo import RankedWord, defining_relations, equivalent, tableau_of
from hyposharp.models import MonoidFactory, find_counterexample
from hyposharp.parser import parse_identity
from hyposharp.representation import psi, psi2_closed, psi3_closed
from hyposharp.schemas import (
    BasisReport,
    ChaosReport,
    EquivalencePayload,
    FamilyPayload,
    MatrixPayload,
    RelationsPayload,
    TableauPayload,
    Verdict,
    WitnessAssignment,
)
from hyposharp.utils.config import load_config
from hyposharp.utils.logger import setup_logger
from hyposharp.words import Identity

logger = setup_logger(__name__)

app = typer.Typer(help="Hypoplactic monoids with involution: tableaux, representations and identities.")
model_app = typer.Typer(help="Inspect the finite witness models.")
app.add_typer(model_app, name="model")

EXIT_REFUTED = 1
EXIT_INPUT = 2


@contextmanager
def _input_errors(command: str) -> Iterator[None]:
    """Report library errors on stderr and exit with status 2."""
    try:
        yield
    except (HyposharpError, ValueError) as error:
        typer.echo(describe(error, command), err=True)
        raise typer.Exit(code=EXIT_INPUT)


def _ranked(texts: List[str], rank: Optional[int]) -> List[RankedWord]:
    """Parse words sharing one rank; the largest letter when no rank is given."""
    if rank is None:
        rank = max(RankedWord.parse(text).rank for text in texts)
    return [RankedWord.parse(text, rank) for text in texts]


def _emit(payload, as_json: bool, text: str) -> None:
    typer.echo(payload.model_dump_json(indent=2) if as_json else text)


def _version(value: bool) -> None:
    if value:
        typer.echo(f"hyposharp {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", callback=_version, is_eager=True, help="Show the version and exit"
    ),
):
    """Hypoplactic monoids with involution: tableaux, representations and identities."""


@app.command()
def tableau(
    word: str = typer.Argument(..., help="Ranked word, e.g. 36131512665"),
    rank: Optional[int] = typer.Option(None, "--rank", "-n", help="Rank of the alphabet"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Print the quasi-ribbon tableau of a word."""
    with _input_errors("tableau"):
        (ranked,) = _ranked([word], rank)
        result = tableau_of(ranked)
    config = load_config()
    rendered = result.render(color=config.color_enabled(), cell_width=config.get("rendering.cell_width", 0))
    _emit(TableauPayload(rows=[list(row) for row in result.rows]), as_json, rendered)


@app.command()
def equiv(
    left: str = typer.Argument(..., help="First ranked word"),
    right: str = typer.Argument(..., help="Second ranked word"),
    rank: Optional[int] = typer.Option(None, "--rank", "-n", help="Rank of the alphabet"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Decide whether two words are hypoplactic congruent."""
    with _input_errors("equiv"):
        u, v = _ranked([left, right], rank)
        result = equivalent(u, v)
    payload = EquivalencePayload(left=str(u), right=str(v), rank=u.rank, equivalent=result)
    _emit(payload, as_json, "true" if result else "false")


@app.command("repr")
def representation(
    word: str = typer.Argument(..., help="Ranked word"),
    rank: Optional[int] = typer.Option(None, "--rank", "-n", help="Rank of the alphabet"),
    closed: bool = typer.Option(False, "--closed", help="Use the closed form (ranks 2 and 3)"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Print the tropical matrix representing a word."""
    with _input_errors("repr"):
        (ranked,) = _ranked([word], rank)
        if closed and ranked.rank == 2:
            matrix = psi2_closed(ranked)
        elif closed and ranked.rank == 3:
            matrix = psi3_closed(ranked)
        elif closed:
            raise ValueError("closed forms exist for ranks 2 and 3 only")
        else:
            matrix = psi(ranked)
    payload = MatrixPayload(dim=matrix.dim, semiring=matrix.semiring.name, entries=matrix.to_entries())
    _emit(payload, as_json, matrix.render())


@app.command("check")
def check_command(
    identity: str = typer.Argument(..., help='Identity such as "x y x* ≈ y x x*"'),
    monoid: Optional[str] = typer.Option(
        None, "--monoid", "-m", help=f"Monoid tag: {', '.join(CheckerFactory.tags())}"
    ),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Decide an identity with the characterization of a monoid."""
    with _input_errors("check"):
        verdict = check(parse_identity(identity), monoid)
    _emit(verdict, as_json, _describe_verdict(verdict))
    logger.info(f"check {verdict.monoid}: {verdict.identity} -> {verdict.holds}")
    if not verdict.holds:
        raise typer.Exit(code=EXIT_REFUTED)


def _describe_verdict(verdict: Verdict) -> str:
    lines = [f"{verdict.identity}: {'holds' if verdict.holds else 'fails'} in {verdict.monoid}"]
    if verdict.failed_condition:
        failure = verdict.failed_condition
        lines.append(f"  clause {failure.clause} at ({', '.join(failure.pair)}): {failure.detail}")
    if verdict.witness_assignment:
        assignment = ", ".join(f"{name} -> {label}" for name, label in verdict.witness_assignment.assignment.items())
        lines.append(f"  refuted by {assignment}")
    return "\n".join(lines)


@app.command()
def oracle(
    identity: str = typer.Argument(..., help="Identity to test"),
    model: str = typer.Option("a01", "--model", help=f"Model: {', '.join(MonoidFactory.names())}"),
    max_vars: Optional[int] = typer.Option(None, "--max-vars", help="Variable cap for the exhaustive search"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Test an identity by trying every assignment into a finite model."""
    with _input_errors("oracle"):
        parsed = parse_identity(identity)
        table = MonoidFactory.create(model)
        witness = find_counterexample(table, parsed, max_vars)
    verdict = Verdict(
        holds=witness is None,
        monoid=table.name,
        identity=str(parsed),
        witness_assignment=WitnessAssignment(model=table.name, assignment=witness) if witness else None,
    )
    _emit(verdict, as_json, _describe_verdict(verdict))
    if witness:
        raise typer.Exit(code=EXIT_REFUTED)


@app.command("chaos")
def chaos_command(
    identity: str = typer.Argument(..., help="Balanced identity"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """List the unstable occurrence pairs and one critical pair."""
    with _input_errors("chaos"):
        parsed = parse_identity(identity)
        unstable = sorted(chaos(parsed))
        critical = find_critical(parsed)
    report = ChaosReport(
        identity=str(parsed),
        unstable=[[str(p), str(q)] for p, q in unstable],
        critical=[str(critical[0]), str(critical[1])] if critical else None,
    )
    lines = [f"unstable: {', '.join('{' + p + ', ' + q + '}' for p, q in report.unstable) or 'none'}"]
    lines.append(f"critical: {'{' + ', '.join(report.critical) + '}' if report.critical else 'none'}")
    _emit(report, as_json, "\n".join(lines))


@app.command()
def pk(
    k: int = typer.Argument(..., help="Family index, at least 2"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Print the identity p_k ≈ q_k."""
    with _input_errors("pk"):
        p, q = build_pk(k), build_qk(k)
    payload = FamilyPayload(k=k, p=str(p), q=str(q), in_p=in_Pk(p, k), in_q=in_Qk(q, k))
    _emit(payload, as_json, str(Identity(p, q)))


@app.command()
def basis(
    monoid: Optional[str] = typer.Option(None, "--monoid", "-m", help="Monoid tag"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Check the four basis identities in a monoid."""
    with _input_errors("basis"):
        verdicts = {name: check(identity, monoid) for name, identity in basis_identities().items()}
    tag = next(iter(verdicts.values())).monoid
    lines = []
    for name, verdict in verdicts.items():
        member = " (basis)" if name in BASES.get(tag, ()) else ""
        lines.append(f"{name:12} {verdict.identity}: {'holds' if verdict.holds else 'fails'}{member}")
    _emit(BasisReport(monoid=tag, verdicts=verdicts), as_json, "\n".join(lines))


@app.command()
def relations(
    rank: int = typer.Option(..., "--rank", "-n", help="Rank of the alphabet"),
    bound: Optional[int] = typer.Option(None, "--bound", help="Largest letter used"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """List the defining relations instantiated over 1..bound."""
    with _input_errors("relations"):
        pairs = defining_relations(rank, bound)
    payload = RelationsPayload(
        rank=rank,
        bound=bound or rank,
        relations=[[str(left), str(right)] for left, right in pairs],
    )
    _emit(payload, as_json, "\n".join(f"{left} = {right}" for left, right in payload.relations))


@model_app.command()
def dump(
    name: str = typer.Option(..., "--name", help=f"Model: {', '.join(MonoidFactory.names())}"),
):
    """Emit the multiplication and involution tables as JSON."""
    with _input_errors("model dump"):
        table = MonoidFactory.create(name)
    typer.echo(table.to_payload().model_dump_json(indent=2))


if __name__ == "__main__":
    app()
