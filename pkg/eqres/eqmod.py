"""Models of equivariant modules over ``R = Sym V`` and their lattices.

Modules are intensional: a kind, a partition and the dimension of V.
Characters and lattices are generated on demand up to a degree bound.

"""

import enum

import attrs

from .errors import PreconditionError
from .partitions import (
    LabeledDiagram,
    Mark,
    Partition,
    SkewShape,
    as_partition,
    horizontal_strips,
    normalize_labels,
    sort_partitions,
    strata,
    vertical_strips,
)
from .rep_ring import (
    DimContext,
    GradedCharacter,
    RepSum,
    as_context,
    pieri_sym,
)
from .reports import CheckReport


# =============================================================================
# MODULE MODELS
# =============================================================================


class ModuleKind(enum.Enum):
    PROJECTIVE = "projective"
    ELEMENTARY = "elementary"
    TRUNCATION = "truncation"


def _check_length(instance, attribute, value):
    if instance.kind is ModuleKind.TRUNCATION:
        if value is None or value < 1:
            raise PreconditionError(
                f"a truncation needs l >= 1, got {value!r}"
            )
    elif value is not None:
        raise PreconditionError(f"l only applies to truncations, got {value}")


@attrs.define(frozen=True)
class ModuleModel:
    """One of ``P_lam``, ``M_lam`` or ``M_lam / V^l M_lam``."""

    kind: ModuleKind = attrs.field(converter=ModuleKind)
    partition: Partition = attrs.field(converter=as_partition)
    ctx: DimContext = attrs.field(converter=as_context)
    l: int = attrs.field(default=None, validator=_check_length)

    @classmethod
    def projective(cls, lam, ctx):
        return cls(kind=ModuleKind.PROJECTIVE, partition=lam, ctx=ctx)

    @classmethod
    def elementary(cls, lam, ctx):
        return cls(kind=ModuleKind.ELEMENTARY, partition=lam, ctx=ctx)

    @classmethod
    def truncation(cls, lam, l, ctx):
        return cls(kind=ModuleKind.TRUNCATION, partition=lam, ctx=ctx, l=l)

    @property
    def label(self):
        lam = self.partition.literal
        if self.kind is ModuleKind.PROJECTIVE:
            return f"P({lam})"
        if self.kind is ModuleKind.ELEMENTARY:
            return f"M({lam})"
        return f"M({lam})/V^{self.l}"

    @property
    def generator_degree(self):
        return self.partition.size

    @property
    def top_degree(self):
        """Highest nonzero degree, ``None`` when unbounded."""
        if self.kind is ModuleKind.TRUNCATION:
            return self.generator_degree + self.l - 1
        return None

    @property
    def is_zero(self):
        return not self.ctx.admits(self.partition)

    def component(self, degree):
        """The representation sitting in internal degree ``degree``."""
        d = degree - self.generator_degree
        if d < 0 or self.is_zero:
            return RepSum()
        if self.kind is ModuleKind.PROJECTIVE:
            return pieri_sym(self.partition, d, self.ctx)
        if self.kind is ModuleKind.TRUNCATION and d >= self.l:
            return RepSum()
        return RepSum.of(self.partition.extend_first_row(d))


def character(m, dmin, dmax):
    """Graded character of ``m`` restricted to ``dmin..dmax``."""
    if dmin > dmax:
        raise PreconditionError(f"empty degree range {dmin}..{dmax}")
    return GradedCharacter(
        (degree, m.component(degree)) for degree in range(dmin, dmax + 1)
    )


# =============================================================================
# LATTICES
# =============================================================================


@attrs.define(frozen=True, order=True)
class LatticeNode:
    degree: int = attrs.field(converter=int)
    partition: Partition = attrs.field(converter=as_partition)
    branch: str = attrs.field(default="", converter=str)
    id: str = attrs.field(init=False, eq=False, order=False)

    @id.default
    def _id_default(self):
        located = f"{self.partition.literal}@{self.degree}"
        return f"{self.branch}:{located}" if self.branch else located


def _check_lattice(instance, attribute, value):
    nodes = {node.id: node for node in instance.nodes}
    if len(nodes) != len(instance.nodes):
        raise PreconditionError("lattice node ids must be unique")
    for source, target in value:
        if source not in nodes or target not in nodes:
            raise PreconditionError(f"dangling edge {source} -> {target}")
        head, tail = nodes[source], nodes[target]
        if tail.degree != head.degree + 1:
            raise PreconditionError(
                f"edge {source} -> {target} must raise the degree by one"
            )
        if tail.partition not in horizontal_strips(head.partition, 1):
            raise PreconditionError(
                f"edge {source} -> {target} does not add a single box"
            )


@attrs.define(frozen=True)
class LatticeModel:
    """Nodes are representations, edges the nonzero multiplications by V."""

    nodes: tuple = attrs.field(converter=lambda v: tuple(sorted(set(v))))
    edges: tuple = attrs.field(
        converter=lambda v: tuple(sorted(set(map(tuple, v)))),
        validator=_check_lattice,
    )

    def node(self, node_id):
        for node in self.nodes:
            if node.id == node_id:
                return node
        raise KeyError(node_id)

    def successors(self, node_id):
        return tuple(
            target for source, target in self.edges if source == node_id
        )

    def out_degree(self, node_id):
        return len(self.successors(node_id))

    def nodes_at(self, degree):
        return tuple(node for node in self.nodes if node.degree == degree)

    def degrees(self):
        return tuple(sorted({node.degree for node in self.nodes}))


def _chain(partitions, branch=""):
    nodes = [LatticeNode(lam.size, lam, branch) for lam in partitions]
    edges = [(a.id, b.id) for a, b in zip(nodes, nodes[1:])]
    return nodes, edges


def lattice(m, dmax):
    """Lattice of ``m`` in degrees ``|lam|..dmax``.

    Projective modules get every arrow the Pieri rule allows; elementary
    modules and truncations are a single chain along the first row.

    """
    start = m.generator_degree
    if dmax < start:
        raise PreconditionError(
            f"dmax={dmax} is below the generator degree {start}"
        )
    if m.kind is not ModuleKind.PROJECTIVE:
        partitions = [
            lam
            for degree in range(start, dmax + 1)
            for lam in m.component(degree)
        ]
        nodes, edges = _chain(partitions)
        return LatticeModel(nodes=nodes, edges=edges)

    nodes, edges = [], []
    for degree in range(start, dmax + 1):
        current = [LatticeNode(degree, lam) for lam in m.component(degree)]
        above = set(m.component(degree + 1)) if degree < dmax else set()
        for node in current:
            edges.extend(
                (node.id, LatticeNode(degree + 1, nu).id)
                for nu in sort_partitions(
                    horizontal_strips(node.partition, 1) & above
                )
            )
        nodes.extend(current)
    return LatticeModel(nodes=nodes, edges=edges)


def tensor_ext_lattice(lam, k, ctx, dmax):
    """Lattice of ``M_lam (x) Ext^k V`` up to degree ``dmax``.

    A node is a summand ``S_alpha`` of ``S_mu (x) Ext^k V``, tagged with
    ``mu``. The arrow ``alpha -> eta`` exists when the labeled diagram that
    puts the V box of ``eta / alpha`` after the wedges normalizes to a
    diagram with its V box in the first row.

    """
    lam, ctx = as_partition(lam), as_context(ctx)
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    if dmax < lam.size + k:
        raise PreconditionError(
            f"dmax={dmax} is below the generator degree {lam.size + k}"
        )

    def _summands(mu):
        return [
            alpha
            for alpha in sort_partitions(vertical_strips(mu, k))
            if ctx.admits(alpha)
        ]

    nodes, edges = [], []
    for d in range(dmax - lam.size - k + 1):
        mu = lam.extend_first_row(d)
        if not ctx.admits(mu):
            break
        nxt = mu.extend_first_row(1)
        for alpha in _summands(mu):
            node = LatticeNode(alpha.size, alpha, mu.literal)
            nodes.append(node)
            if alpha.size == dmax:
                continue
            wedges = SkewShape(outer=alpha, inner=mu).boxes()
            for eta in sort_partitions(horizontal_strips(alpha, 1)):
                if not ctx.admits(eta):
                    continue
                marks = {box: Mark.WEDGE for box in wedges}
                (vbox,) = SkewShape(outer=eta, inner=alpha).boxes()
                marks[vbox] = Mark.VBOX
                diagram = LabeledDiagram(base=mu, shape=eta, marks=marks)
                if normalize_labels(diagram).vbox[0] == 1:
                    target = LatticeNode(eta.size, eta, nxt.literal)
                    edges.append((node.id, target.id))
    return LatticeModel(nodes=nodes, edges=edges)


# =============================================================================
# FILTRATION
# =============================================================================


def filtration_strata(lam):
    """``[S(lam, 0), ..., S(lam, lam_1)]``."""
    lam = as_partition(lam)
    return [strata(lam, i) for i in range(lam[0] + 1)]


def verify_filtration(lam, ctx, dmax):
    """Compare ``P_lam`` with the sum of the ``M_beta`` of its strata."""
    lam, ctx = as_partition(lam), as_context(ctx)
    projective = ModuleModel.projective(lam, ctx)
    graded = [
        ModuleModel.elementary(beta, ctx)
        for layer in filtration_strata(lam)
        for beta in layer
    ]
    wrong = []
    for degree in range(lam.size, dmax + 1):
        expected = projective.component(degree)
        found = sum((m.component(degree) for m in graded), RepSum())
        if expected != found:
            wrong.append(degree)
    return CheckReport(
        check="filtration",
        passed=not wrong,
        instance={"lambda": lam, "n": ctx.n, "dmax": dmax},
        detail=f"mismatch in degrees {wrong}" if wrong else "",
    )


def ses_check(lam, l, ctx, dmax):
    """Character identity of ``0 -> V^l M -> M -> M / V^l M -> 0``."""
    lam, ctx = as_partition(lam), as_context(ctx)
    whole = ModuleModel.elementary(lam, ctx)
    sub = ModuleModel.elementary(lam.extend_first_row(l), ctx)
    quotient = ModuleModel.truncation(lam, l, ctx)
    wrong = [
        degree
        for degree in range(lam.size, dmax + 1)
        if quotient.component(degree) + sub.component(degree)
        != whole.component(degree)
    ]
    return CheckReport(
        check="ses",
        passed=not wrong,
        instance={"lambda": lam, "l": l, "n": ctx.n, "dmax": dmax},
        detail=f"mismatch in degrees {wrong}" if wrong else "",
    )


# =============================================================================
# SPLICING
# =============================================================================


def _check_branch(start, degree, glue):
    if degree != start.size:
        raise PreconditionError(
            f"branch {start} must start in degree {start.size}, got {degree}"
        )
    if glue.parts[1:] != start.parts[1:] or glue[0] < start[0]:
        raise PreconditionError(
            f"glue {glue} is not reachable from the branch {start}"
        )


def splice(branches, glue, dmax=None):
    """Lattice of ``(M_1 + ... + M_r) / <diagonal S_glue>``.

    Below the glue degree every branch keeps its own chain; from the glue
    degree on the ``r`` copies of the glue chain collapse to ``r - 1``
    merged chains. Branch ``k`` feeds merged chain ``k`` and the last branch
    feeds all of them. A single branch therefore gives its truncation.

    """
    glue_partition, glue_degree = glue
    glue_partition = as_partition(glue_partition)
    if glue_degree != glue_partition.size:
        raise PreconditionError(
            f"glue {glue_partition} must sit in degree "
            f"{glue_partition.size}, got {glue_degree}"
        )
    if not branches:
        raise PreconditionError("at least one branch is needed")
    dmax = glue_degree + 2 if dmax is None else dmax
    if dmax < glue_degree:
        raise PreconditionError(f"dmax={dmax} is below the glue degree")

    starts = []
    for start, degree in branches:
        start = as_partition(start)
        _check_branch(start, degree, glue_partition)
        starts.append(start)

    count = len(starts)
    merged = [
        _chain(
            [
                glue_partition.extend_first_row(d)
                for d in range(dmax - glue_degree + 1)
            ],
            branch=f"m{idx}",
        )
        for idx in range(count - 1)
    ]
    nodes = [node for chain_nodes, _ in merged for node in chain_nodes]
    edges = [edge for _, chain_edges in merged for edge in chain_edges]

    for idx, start in enumerate(starts):
        chain_nodes, chain_edges = _chain(
            [
                start.extend_first_row(d)
                for d in range(glue_partition[0] - start[0])
            ],
            branch=f"b{idx}",
        )
        nodes.extend(chain_nodes)
        edges.extend(chain_edges)
        if not chain_nodes or not merged:
            continue
        feeds = merged if idx == count - 1 else [merged[idx]]
        last = chain_nodes[-1]
        edges.extend((last.id, heads[0].id) for heads, _ in feeds)

    return LatticeModel(nodes=nodes, edges=edges)
