import enum
from typing import Optional

import rich
import typer
from rich import progress
from rich.console import Console

from . import documents as docs
from .documents import OutputDocument, OutputFormat
from .register import EqresCommandRegister
from .. import verify as verify_suites
from ..eqmod import ModuleModel, lattice as module_lattice
from ..eqmod import splice, tensor_ext_lattice
from ..errors import PreconditionError
from ..partitions import parse_located, parse_partition
from ..rep_ring import DimContext
from ..res import EQRES_LOGO, EXIT_FAILED
from ..resolutions import BettiTable, betti_table, ext_indices
from ..utils import sysinfo


CLI_BUILTINS = EqresCommandRegister("BUILTINS")


class Suite(str, enum.Enum):
    FILTRATION = "filtration"
    EULER = "euler"
    BRUTE = "brute"
    PIERI = "pieri"
    COASS = "coass"
    SAM = "sam"


def _emit(document):
    typer.echo(document.render())


def _context(n):
    try:
        return DimContext(n)
    except ValueError as err:
        raise PreconditionError(f"--n must be >= 1, got {n}") from err


# =============================================================================
# COMMANDS
# =============================================================================


@CLI_BUILTINS.register
def version(app):
    """Display eqres version and platform information."""
    rich.print(f"{EQRES_LOGO} v.{app.version}")
    rich.print(sysinfo.info_dict())


@CLI_BUILTINS.register
def tor(
    app,
    lam: str = typer.Option(..., "--lambda", help="Partition, e.g. 2,1."),
    n: int = typer.Option(..., "--n", help="Dimension of V."),
    l: Optional[int] = typer.Option(
        None, "--l", help="Truncate above V^l M_lambda."
    ),
    projective: bool = typer.Option(
        False, "--projective", help="Use P_lambda instead of M_lambda."
    ),
    imax: Optional[int] = typer.Option(
        None, "--imax", help="Largest homological index shown."
    ),
    output: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Betti table of M_lambda, its truncation or P_lambda.

    Every row is a pair (i, degree) with the representations of
    Tor_i(M, k) in that internal degree and their dimensions.

    """
    partition, ctx = parse_partition(lam), _context(n)
    if projective and l is not None:
        raise PreconditionError("--projective and --l are exclusive")
    if projective:
        m = ModuleModel.projective(partition, ctx)
    elif l is None:
        m = ModuleModel.elementary(partition, ctx)
    else:
        m = ModuleModel.truncation(partition, l, ctx)

    table = betti_table(m)
    if imax is not None:
        table = BettiTable(
            {key: rep for key, rep in table.items() if key[0] <= imax}, ctx
        )
    app.logger.info("%s: %d Betti entries", m.label, len(table))

    if output is OutputFormat.JSON:
        payload = docs.betti_to_json(table)
    elif output is OutputFormat.TEXT:
        payload = docs.betti_to_text(table, title=f"{m.label}, n={n}")
    else:
        raise PreconditionError("tor has no dot output")
    _emit(OutputDocument(output, payload))


@CLI_BUILTINS.register
def lattice(
    app,
    n: int = typer.Option(..., "--n", help="Dimension of V."),
    dmax: Optional[int] = typer.Option(
        None, "--dmax", help="Largest internal degree drawn."
    ),
    proj: Optional[str] = typer.Option(None, "--proj", help="P_lambda."),
    elem: Optional[str] = typer.Option(None, "--elem", help="M_lambda."),
    trunc: Optional[str] = typer.Option(
        None, "--trunc", help="M_lambda / V^l M_lambda, with --l."
    ),
    l: Optional[int] = typer.Option(None, "--l"),
    tensor_ext: Optional[str] = typer.Option(
        None, "--tensor-ext", help="M_lambda (x) Ext^k V, with --k."
    ),
    k: Optional[int] = typer.Option(None, "--k"),
    splice_branches: Optional[str] = typer.Option(
        None, "--splice", help="Branches 'a,b@d;c@e', with --glue."
    ),
    glue: Optional[str] = typer.Option(None, "--glue"),
    output: OutputFormat = typer.Option(OutputFormat.DOT, "--format"),
):
    """Lattice of a module: representations joined by multiplication by V.

    Choose exactly one of --proj, --elem, --trunc, --tensor-ext or
    --splice. DOT nodes are labeled partition@degree.

    """
    specs = {
        "--proj": proj,
        "--elem": elem,
        "--trunc": trunc,
        "--tensor-ext": tensor_ext,
        "--splice": splice_branches,
    }
    chosen = [flag for flag, value in specs.items() if value is not None]
    if len(chosen) != 1:
        raise PreconditionError(
            f"choose exactly one of {', '.join(specs)}, got {chosen or 'none'}"
        )
    ctx = _context(n)

    if splice_branches is not None:
        if glue is None:
            raise PreconditionError("--splice needs --glue")
        branches = [
            parse_located(chunk)
            for chunk in splice_branches.split(";")
            if chunk.strip()
        ]
        model = splice(branches, parse_located(glue), dmax=dmax)
    else:
        if dmax is None:
            raise PreconditionError(f"{chosen[0]} needs --dmax")
        if tensor_ext is not None:
            if k is None:
                raise PreconditionError("--tensor-ext needs --k")
            base = parse_partition(tensor_ext)
            model = tensor_ext_lattice(base, k, ctx, dmax)
        elif trunc is not None:
            if l is None:
                raise PreconditionError("--trunc needs --l")
            m = ModuleModel.truncation(parse_partition(trunc), l, ctx)
            model = module_lattice(m, dmax)
        elif proj is not None:
            m = ModuleModel.projective(parse_partition(proj), ctx)
            model = module_lattice(m, dmax)
        else:
            m = ModuleModel.elementary(parse_partition(elem), ctx)
            model = module_lattice(m, dmax)

    app.logger.info(
        "lattice: %d nodes, %d edges", len(model.nodes), len(model.edges)
    )
    if output is OutputFormat.JSON:
        payload = docs.lattice_to_json(model)
    elif output is OutputFormat.DOT:
        payload = docs.lattice_to_dot(model)
    else:
        payload = docs.lattice_to_text(model)
    _emit(OutputDocument(output, payload))


@CLI_BUILTINS.register
def verify(
    app,
    suite: Suite = typer.Argument(..., help="Property grid to run."),
    n: Optional[int] = typer.Option(
        None, "--n", help="Run the grid in this single dimension."
    ),
    max_n: Optional[int] = typer.Option(
        None, "--max-n", help="Run the grid for every n up to this one."
    ),
    max_size: Optional[int] = typer.Option(
        None, "--max-size", help="Largest |lambda| (or l for coass)."
    ),
    max_l: Optional[int] = typer.Option(None, "--max-l"),
    extra: int = typer.Option(
        8, "--extra", help="Degrees checked above |lambda|."
    ),
    workers: Optional[int] = typer.Option(
        None, "--workers", help="Worker processes."
    ),
    output: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Run a property grid; exit 2 with counterexamples on any failure."""
    if (n is None) == (max_n is None):
        raise PreconditionError("give exactly one of --n and --max-n")
    if output is OutputFormat.DOT:
        raise PreconditionError("verify has no dot output")
    dims = [_context(n).n] if n is not None else _context(max_n).n
    workers = app.workers if workers is None else workers

    options = {
        "max_size": max_size,
        "max_l": max_l,
        "extra": extra,
        "cap": app.basis_cap,
    }
    total = len(verify_suites.suite_instances(suite.value, dims, **options))
    with progress.Progress(
        progress.SpinnerColumn(),
        progress.TextColumn("[progress.description]{task.description}"),
        progress.BarColumn(),
        progress.MofNCompleteColumn(),
        console=Console(stderr=True),
        transient=True,
    ) as prgss:
        task = prgss.add_task(description=f"- {suite.value}", total=total)
        report = verify_suites.run_suite(
            suite.value,
            dims,
            workers=workers,
            on_result=lambda _: prgss.advance(task),
            **options,
        )

    if output is OutputFormat.JSON:
        payload = docs.report_to_json(report)
    else:
        payload = docs.report_to_text(report)
    _emit(OutputDocument(output, payload))
    if not report.passed:
        raise typer.Exit(code=EXIT_FAILED)


@CLI_BUILTINS.register
def ext(
    app,
    lam: str = typer.Option(..., "--lambda", help="Source partition."),
    eta: str = typer.Option(..., "--eta", help="Target partition."),
    n: int = typer.Option(..., "--n", help="Dimension of V."),
    imax: Optional[int] = typer.Option(
        None, "--imax", help="Largest index checked, n by default."
    ),
    output: OutputFormat = typer.Option(OutputFormat.TEXT, "--format"),
):
    """Indices i with Ext^i(S_lambda, S_eta) = k."""
    source, target = parse_partition(lam), parse_partition(eta)
    ctx = _context(n)
    indices = ext_indices(source, target, ctx, imax=imax)
    if output is OutputFormat.JSON:
        payload = docs.ext_to_json(source, target, n, indices)
    elif output is OutputFormat.TEXT:
        payload = docs.ext_to_text(indices)
    else:
        raise PreconditionError("ext has no dot output")
    _emit(OutputDocument(output, payload))
