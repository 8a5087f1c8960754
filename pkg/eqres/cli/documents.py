"""Text, JSON and DOT documents printed by the command line.

JSON documents carry ``"schema": "eqres/1"`` and are written with sorted
keys, so identical invocations print identical bytes.

"""

import enum
import io

import attrs
import ujson
from rich import box
from rich.console import Console
from rich.table import Table

from ..eqmod import LatticeModel, LatticeNode
from ..errors import PreconditionError
from ..partitions import Partition
from ..rep_ring import RepSum, dim_schur
from ..res import SCHEMA
from ..resolutions import BettiTable

_TEXT_WIDTH = 100


class OutputFormat(str, enum.Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


@attrs.define(frozen=True)
class OutputDocument:
    """A rendered payload: a string for text and dot, a dict for json."""

    format: OutputFormat = attrs.field(converter=OutputFormat)
    payload: object

    def render(self):
        if self.format is OutputFormat.JSON:
            return ujson.dumps(self.payload, sort_keys=True, indent=2)
        return self.payload.rstrip("\n")


# =============================================================================
# HELPERS
# =============================================================================


def _capture(*renderables):
    console = Console(
        file=io.StringIO(),
        width=_TEXT_WIDTH,
        color_system=None,
        force_terminal=False,
    )
    for renderable in renderables:
        console.print(renderable)
    return console.file.getvalue()


def _load(data, kind):
    if isinstance(data, (str, bytes)):
        data = ujson.loads(data)
    if data.get("schema") != SCHEMA:
        raise PreconditionError(
            f"expected schema {SCHEMA!r}, got {data.get('schema')!r}"
        )
    if data.get("kind") != kind:
        raise PreconditionError(
            f"expected a {kind} document, got {data.get('kind')!r}"
        )
    return data


def _rep_to_json(rep, ctx):
    return [
        {
            "partition": list(lam.parts),
            "multiplicity": mult,
            "dim": mult * dim_schur(lam, ctx),
        }
        for lam, mult in rep.items()
    ]


def _rep_from_json(items):
    return RepSum(
        {Partition(item["partition"]): item["multiplicity"] for item in items}
    )


def _rep_text(rep):
    return " + ".join(
        f"{mult} S({lam.literal})" if mult != 1 else f"S({lam.literal})"
        for lam, mult in rep.items()
    )


# =============================================================================
# BETTI TABLES
# =============================================================================


def betti_to_json(table):
    return {
        "schema": SCHEMA,
        "kind": "betti",
        "n": table.ctx.n,
        "entries": [
            {
                "i": i,
                "degree": degree,
                "representations": _rep_to_json(rep, table.ctx),
            }
            for (i, degree), rep in table.items()
        ],
    }


def betti_from_json(data):
    data = _load(data, "betti")
    return BettiTable(
        {
            (entry["i"], entry["degree"]): _rep_from_json(
                entry["representations"]
            )
            for entry in data["entries"]
        },
        data["n"],
    )


def betti_to_text(table, title=""):
    grid = Table(title=title or None, box=box.SIMPLE)
    grid.add_column("i", justify="right")
    grid.add_column("degree", justify="right")
    grid.add_column("representation")
    grid.add_column("dim", justify="right")
    for (i, degree), rep in table.items():
        grid.add_row(
            str(i), str(degree), _rep_text(rep), str(rep.dim(table.ctx))
        )
    return _capture(grid)


# =============================================================================
# LATTICES
# =============================================================================


def lattice_to_json(model):
    return {
        "schema": SCHEMA,
        "kind": "lattice",
        "nodes": [
            {
                "id": node.id,
                "partition": list(node.partition.parts),
                "degree": node.degree,
                "branch": node.branch,
            }
            for node in model.nodes
        ],
        "edges": [list(edge) for edge in model.edges],
    }


def lattice_from_json(data):
    data = _load(data, "lattice")
    nodes = [
        LatticeNode(
            node["degree"], Partition(node["partition"]), node["branch"]
        )
        for node in data["nodes"]
    ]
    return LatticeModel(nodes=nodes, edges=data["edges"])


def lattice_to_dot(model, name="lattice"):
    """A ``digraph`` with nodes labeled ``partition@degree``."""
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for node in model.nodes:
        label = f"{node.partition.literal}@{node.degree}"
        lines.append(f'  "{node.id}" [label="{label}"];')
    for source, target in model.edges:
        lines.append(f'  "{source}" -> "{target}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_text(model):
    grid = Table(box=box.SIMPLE)
    grid.add_column("degree", justify="right")
    grid.add_column("node")
    grid.add_column("arrows to")
    for node in model.nodes:
        grid.add_row(
            str(node.degree), node.id, ", ".join(model.successors(node.id))
        )
    return _capture(grid)


# =============================================================================
# VERIFICATION REPORTS
# =============================================================================


def report_to_json(report):
    return {"schema": SCHEMA, "kind": "verification", **report.to_dict()}


def report_to_text(report):
    status = "PASS" if report.passed else "FAIL"
    summary = (
        f"{report.suite}: {status} "
        f"({len(report) - len(report.failures)}/{len(report)} passed)"
    )
    if report.passed:
        return summary + "\n"
    grid = Table(title="counterexamples", box=box.SIMPLE)
    grid.add_column("instance")
    grid.add_column("detail")
    for failure in report.failures:
        instance = ", ".join(
            f"{k}={v}" for k, v in failure.to_dict()["instance"].items()
        )
        grid.add_row(instance, failure.detail)
    return summary + "\n" + _capture(grid)


# =============================================================================
# EXT
# =============================================================================


def ext_to_json(lam, eta, n, indices):
    return {
        "schema": SCHEMA,
        "kind": "ext",
        "lambda": list(lam.parts),
        "eta": list(eta.parts),
        "n": n,
        "indices": list(indices),
    }


def ext_to_text(indices):
    return "[" + ", ".join(str(i) for i in indices) + "]\n"
