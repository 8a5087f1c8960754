"""Partitions, Young diagrams and labeled diagrams.

Boxes are addressed as ``(row, column)`` pairs, both starting at 1, with the
first row on top (english notation).

"""

import enum
import itertools as it
from collections import abc

import attrs

from .errors import (
    InvalidDiagramError,
    InvalidPartitionError,
    PreconditionError,
)


# =============================================================================
# PARTITION
# =============================================================================


def _canonical_parts(value):
    if isinstance(value, Partition):
        return value.parts
    if isinstance(value, str):
        raise InvalidPartitionError(
            f"use parse_partition() for literals, got {value!r}"
        )
    try:
        parts = [int(part) for part in value]
    except (TypeError, ValueError) as err:
        raise InvalidPartitionError(f"not a partition: {value!r}") from err
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def _check_parts(instance, attribute, value):
    if any(part < 1 for part in value):
        raise InvalidPartitionError(f"parts must be positive: {value!r}")
    if any(a < b for a, b in it.pairwise(value)):
        raise InvalidPartitionError(
            f"parts must be weakly decreasing: {value!r}"
        )


@attrs.define(frozen=True, order=True, repr=False)
class Partition:
    """A partition stored as its nonzero parts.

    Trailing zeros are dropped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same value.

    """

    parts: tuple = attrs.field(
        default=(), converter=_canonical_parts, validator=_check_parts
    )

    def __repr__(self):
        return f"Partition({self.literal})"

    def __str__(self):
        return self.literal

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx):
        if 0 <= idx < len(self.parts):
            return self.parts[idx]
        return 0

    # API =====================================================================

    @property
    def size(self):
        return sum(self.parts)

    @property
    def literal(self):
        return ",".join(str(part) for part in self.parts) or "0"

    def sort_key(self):
        """Order by size, then lexicographically decreasing."""
        return (self.size, tuple(-part for part in self.parts))

    def conjugate(self):
        return conjugate(self)

    def contains(self, other):
        other = as_partition(other)
        return len(other) <= len(self) and all(
            self[idx] >= part for idx, part in enumerate(other)
        )

    def boxes(self):
        return tuple(
            (row, col)
            for row, part in enumerate(self.parts, start=1)
            for col in range(1, part + 1)
        )

    def extend_first_row(self, d):
        if d < 0:
            raise PreconditionError(f"cannot extend by {d} boxes")
        return Partition((self[0] + d,) + self.parts[1:])


def as_partition(value):
    """Coerce a Partition, a sequence of parts or a literal."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return Partition(value)


def parse_partition(literal):
    """Parse the ``"a,b,c"`` literal syntax (``""`` and ``"0"`` are empty)."""
    text = literal.strip().strip("()").strip()
    if text in ("", "0"):
        return Partition()
    try:
        parts = [int(chunk) for chunk in text.split(",")]
    except ValueError as err:
        raise InvalidPartitionError(
            f"malformed partition literal {literal!r}"
        ) from err
    return Partition(parts)


def parse_located(literal):
    """Parse ``"a,b@d"`` into ``(Partition, degree)``."""
    partition, sep, degree = literal.partition("@")
    if not sep:
        raise InvalidPartitionError(
            f"expected 'partition@degree', got {literal!r}"
        )
    try:
        degree = int(degree)
    except ValueError as err:
        raise InvalidPartitionError(
            f"malformed degree in {literal!r}"
        ) from err
    return parse_partition(partition), degree


def sort_partitions(partitions):
    return tuple(sorted(partitions, key=Partition.sort_key))


def _check_count(k, name="k"):
    if k < 0:
        raise PreconditionError(f"{name} must be >= 0, got {k}")


# =============================================================================
# SHAPE OPERATIONS
# =============================================================================


def conjugate(lam):
    lam = as_partition(lam)
    return Partition(
        sum(1 for part in lam.parts if part >= col)
        for col in range(1, lam[0] + 1)
    )


def saturation(lam):
    """Put one box on top of every column."""
    lam = as_partition(lam)
    return conjugate(part + 1 for part in conjugate(lam))


def underline(lam):
    """Remove one box from every nonempty column."""
    lam = as_partition(lam)
    return conjugate(part - 1 for part in conjugate(lam))


def is_vertical_strip(mu, lam):
    mu, lam = as_partition(mu), as_partition(lam)
    return mu.contains(lam) and all(
        mu[row] - lam[row] <= 1 for row in range(len(mu))
    )


def is_horizontal_strip(mu, lam):
    mu, lam = as_partition(mu), as_partition(lam)
    return mu.contains(lam) and all(
        mu[row + 1] <= lam[row] for row in range(len(mu))
    )


def vertical_strips(lam, k):
    """VS(lam, k): add ``k`` boxes, no two in the same row."""
    lam = as_partition(lam)
    _check_count(k)
    height = len(lam) + k
    found = set()
    for rows in it.combinations(range(height), k):
        parts = [lam[row] for row in range(height)]
        for row in rows:
            parts[row] += 1
        if all(a >= b for a, b in it.pairwise(parts)):
            found.add(Partition(parts))
    return frozenset(found)


def horizontal_strips(lam, k):
    """HS(lam, k): add ``k`` boxes, no two in the same column."""
    lam = as_partition(lam)
    _check_count(k)
    parts = lam.parts + (0,)
    found = set()

    def _fill(row, remaining, acc):
        if row == len(parts):
            if remaining == 0:
                found.add(Partition(acc))
            return
        room = remaining if row == 0 else parts[row - 1] - parts[row]
        for extra in range(min(room, remaining) + 1):
            _fill(row + 1, remaining - extra, acc + (parts[row] + extra,))

    _fill(0, k, ())
    return frozenset(found)


def _addable_rows(lam):
    return [
        row
        for row in range(len(lam) + 1)
        if row == 0 or lam[row - 1] > lam[row]
    ]


def naive_strips(lam, k, vertical=True):
    """Add ``k`` boxes one at a time and keep the strips.

    Slow reference enumeration for the strip enumerators.

    """
    lam = as_partition(lam)
    _check_count(k)
    shapes = {lam}
    for _ in range(k):
        grown = set()
        for shape in shapes:
            for row in _addable_rows(shape):
                parts = list(shape.parts) + [0]
                parts[row] += 1
                grown.add(Partition(parts))
        shapes = grown
    is_strip = is_vertical_strip if vertical else is_horizontal_strip
    return frozenset(mu for mu in shapes if is_strip(mu, lam))


def strata(lam, i):
    """S(lam, i): shapes between lam and its saturation missing ``i`` boxes."""
    lam = as_partition(lam)
    width = lam[0]
    if not 0 <= i <= width:
        return frozenset()
    saturated = saturation(lam)
    return frozenset(
        beta
        for beta in horizontal_strips(lam, width - i)
        if saturated.contains(beta)
    )


# =============================================================================
# ENUMERATION
# =============================================================================


def partitions_of(size, max_rows=None):
    """All partitions of ``size``, lexicographically decreasing."""
    _check_count(size, "size")
    found = []

    def _split(remaining, largest, acc):
        if remaining == 0:
            found.append(Partition(acc))
            return
        if max_rows is not None and len(acc) >= max_rows:
            return
        for part in range(min(remaining, largest), 0, -1):
            _split(remaining - part, part, acc + (part,))

    _split(size, size, ())
    return tuple(found)


def partitions_up_to(max_size, max_rows=None):
    return tuple(
        lam
        for size in range(max_size + 1)
        for lam in partitions_of(size, max_rows=max_rows)
    )


# =============================================================================
# SKEW SHAPES
# =============================================================================


def _check_skew(instance, attribute, value):
    if not instance.outer.contains(instance.inner):
        raise InvalidDiagramError(
            f"{instance.inner} is not contained in {instance.outer}"
        )


@attrs.define(frozen=True)
class SkewShape:
    outer: Partition = attrs.field(converter=as_partition)
    inner: Partition = attrs.field(
        converter=as_partition, validator=_check_skew
    )

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def boxes(self):
        return tuple(
            (row, col)
            for row, part in enumerate(self.outer.parts, start=1)
            for col in range(self.inner[row - 1] + 1, part + 1)
        )

    def is_vertical_strip(self):
        return is_vertical_strip(self.outer, self.inner)

    def is_horizontal_strip(self):
        return is_horizontal_strip(self.outer, self.inner)


def diagram_of(boxes):
    """Return the partition whose diagram is ``boxes`` or ``None``."""
    lengths = {}
    for row, col in boxes:
        lengths.setdefault(row, set()).add(col)
    parts = []
    for row in range(1, len(lengths) + 1):
        cols = lengths.get(row)
        if cols is None or cols != set(range(1, len(cols) + 1)):
            return None
        parts.append(len(cols))
    if any(a < b for a, b in it.pairwise(parts)):
        return None
    return Partition(parts)


# =============================================================================
# LABELED DIAGRAMS
# =============================================================================


class Mark(enum.Enum):
    WEDGE = "W"
    VBOX = "V"


def _canonical_marks(value):
    items = value.items() if isinstance(value, abc.Mapping) else value
    marks = {}
    for box, mark in items:
        row, col = box
        marks[(int(row), int(col))] = Mark(mark)
    return tuple(sorted(marks.items()))


def _check_marks(instance, attribute, value):
    if not instance.shape.contains(instance.base):
        raise InvalidDiagramError(
            f"{instance.base} is not contained in {instance.shape}"
        )
    skew = SkewShape(outer=instance.shape, inner=instance.base)
    if {box for box, _ in value} != set(skew.boxes()):
        raise InvalidDiagramError(
            "marks must cover exactly the boxes of "
            f"{instance.shape} / {instance.base}"
        )
    vboxes = [box for box, mark in value if mark is Mark.VBOX]
    if len(vboxes) != 1:
        raise InvalidDiagramError(
            f"exactly one V box expected, found {len(vboxes)}"
        )
    wedge_rows = [box[0] for box, mark in value if mark is Mark.WEDGE]
    if len(wedge_rows) != len(set(wedge_rows)):
        raise InvalidDiagramError("two wedge marks share a row")


@attrs.define(frozen=True)
class LabeledDiagram:
    """A skew extension of ``base`` with every added box marked.

    The wedge boxes are the ones contributed by the exterior power, the
    single V box the one contributed by V.

    """

    base: Partition = attrs.field(converter=as_partition)
    shape: Partition = attrs.field(converter=as_partition)
    marks: tuple = attrs.field(
        converter=_canonical_marks, validator=_check_marks
    )

    @property
    def skew(self):
        return SkewShape(outer=self.shape, inner=self.base)

    @property
    def vbox(self):
        return next(box for box, mark in self.marks if mark is Mark.VBOX)

    @property
    def wedges(self):
        return tuple(box for box, mark in self.marks if mark is Mark.WEDGE)

    @property
    def k(self):
        return len(self.wedges)

    def marks_dict(self):
        return dict(self.marks)

    def wedge_shape(self):
        """Base plus the wedge boxes, if that is a diagram."""
        return diagram_of(self.base.boxes() + self.wedges)

    def vbox_shape(self):
        """Base plus the V box, if that is a diagram."""
        return diagram_of(self.base.boxes() + (self.vbox,))

    def is_v_outside(self):
        """Wedges were added first and V last."""
        return self.wedge_shape() is not None

    def is_v_inside(self):
        """V was added first and the wedges after it."""
        return self.vbox_shape() is not None


def normalize_labels(diagram):
    """Move the V box of a V-outside diagram inside.

    Returns the V-inside labeling of the same shape that defines the same
    embedding into ``V (x) S_base (x) Ext^k V``. Diagrams already in V-inside
    form come back unchanged.

    """
    if diagram.is_v_inside():
        return diagram
    if not diagram.is_v_outside():
        raise InvalidDiagramError(
            "diagram is neither in V-outside nor in V-inside form"
        )

    vbox = diagram.vbox
    marks = diagram.marks_dict()
    row_mates = [box for box in diagram.wedges if box[0] == vbox[0]]
    if row_mates:
        # the only row with two boxes: V goes first
        (wedge,) = row_mates
        marks[wedge], marks[vbox] = Mark.VBOX, Mark.WEDGE
    else:
        column = sorted(
            box for box in diagram.skew.boxes() if box[1] == vbox[1]
        )
        top = column[0]
        if top != vbox:
            marks[top], marks[vbox] = Mark.VBOX, Mark.WEDGE

    return LabeledDiagram(base=diagram.base, shape=diagram.shape, marks=marks)


def _skew_box(outer, inner):
    (box,) = SkewShape(outer=outer, inner=inner).boxes()
    return box


def outside_diagrams(lam, k, max_rows=None):
    """Labeled diagrams of ``V (x) (S_lam (x) Ext^k V)``."""
    lam = as_partition(lam)
    found = []
    for alpha in sort_partitions(vertical_strips(lam, k)):
        wedges = SkewShape(outer=alpha, inner=lam).boxes()
        for eta in sort_partitions(horizontal_strips(alpha, 1)):
            if max_rows is not None and len(eta) > max_rows:
                continue
            marks = {box: Mark.WEDGE for box in wedges}
            marks[_skew_box(eta, alpha)] = Mark.VBOX
            found.append(LabeledDiagram(base=lam, shape=eta, marks=marks))
    return tuple(found)


def inside_diagrams(lam, k, max_rows=None):
    """Labeled diagrams of ``(V (x) S_lam) (x) Ext^k V``."""
    lam = as_partition(lam)
    found = []
    for beta in sort_partitions(horizontal_strips(lam, 1)):
        vbox = _skew_box(beta, lam)
        for eta in sort_partitions(vertical_strips(beta, k)):
            if max_rows is not None and len(eta) > max_rows:
                continue
            marks = {
                box: Mark.WEDGE
                for box in SkewShape(outer=eta, inner=beta).boxes()
            }
            marks[vbox] = Mark.VBOX
            found.append(LabeledDiagram(base=lam, shape=eta, marks=marks))
    return tuple(found)
