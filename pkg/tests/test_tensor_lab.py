import pytest
from hypothesis import given, strategies as st

from eqres.errors import (
    GuardrailError,
    InvalidDiagramError,
    InvalidPartitionError,
    PreconditionError,
)
from eqres.partitions import (
    LabeledDiagram,
    normalize_labels,
    outside_diagrams,
    partitions_up_to,
)
from eqres.rep_ring import dim_schur
from eqres.tensor_lab import schur
from eqres.tensor_lab import (
    Factor,
    LinMap,
    PieriMode,
    Tableau,
    TensorSpace,
    columns_to_rows,
    comult_ext,
    coassociativity_paths,
    highest_tableau,
    kostka,
    labeled_embedding,
    permute_factors,
    pieri_inclusion,
    same_span,
    schur_module,
    semistandard_tableaux,
    shuffle_terms,
    sort_sign,
    sym_product,
    verify_coassociativity,
    verify_sam,
    wedge_product,
)


# =============================================================================
# SIGNS AND SPACES
# =============================================================================


@pytest.mark.parametrize(
    "seq, sign",
    [((), 1), ((1, 2, 3), 1), ((2, 1), -1), ((3, 1, 2), 1), ((1, 1), 0)],
)
def test_sort_sign(seq, sign):
    assert sort_sign(seq) == sign


def test_shuffle_terms():
    assert list(shuffle_terms((1, 2), 1)) == [
        (-1, (2,), (1,)),
        (1, (1,), (2,)),
    ]
    assert list(shuffle_terms((1, 2, 3), 0)) == [(1, (1, 2, 3), ())]


def test_tableaux():
    assert len(semistandard_tableaux((2, 1), 3)) == 8
    assert str(Tableau([(1, 1), (2,)])) == "11|2"
    assert highest_tableau((2, 1)) == Tableau([(1, 1), (2,)])
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((2, 1), (2, 1)) == 1
    with pytest.raises(InvalidPartitionError):
        Tableau([(1, 1), (1,)])


def test_tensor_space():
    space = TensorSpace([Factor.ext(2), Factor.sym(2)], 3)
    assert space.dim == 18
    assert len(space.basis) == 18
    assert space.basis[0] == ((1, 2), (1, 1))
    assert space.index(((1, 2), (1, 2))) == 1
    assert str(space) == "Ext(2) (x) Sym(2)"


def test_tensor_space_guardrail():
    with pytest.raises(GuardrailError):
        TensorSpace([Factor.sym(3)] * 3, 4, cap=100)


def test_factor_takes_one_degree():
    with pytest.raises(InvalidPartitionError):
        Factor("Ext", (1, 1))


# =============================================================================
# LINEAR MAPS
# =============================================================================


def test_wedge_after_comultiplication():
    ext2 = TensorSpace([Factor.ext(2)], 3)
    composite = wedge_product(1, 1, 3) @ comult_ext(2, 1, 3)
    assert composite == LinMap.identity(ext2).scaled(2)


def test_comultiplication_image():
    delta = comult_ext(2, 1, 3)
    assert delta.image(((1, 2),)) == {((1,), (2,)): 1, ((2,), (1,)): -1}
    with pytest.raises(PreconditionError):
        comult_ext(2, 3, 3)


def test_compose_checks_spaces():
    with pytest.raises(PreconditionError):
        comult_ext(2, 1, 3) @ comult_ext(2, 1, 3)


def test_tensor_of_identities():
    a = TensorSpace([Factor.ext(1)], 2)
    b = TensorSpace([Factor.sym(2)], 2)
    product = LinMap.identity(a).tensor(LinMap.identity(b))
    assert product == LinMap.identity(a.tensor(b))
    assert LinMap.zero(a, b).is_zero
    assert not product.is_zero


def test_permute_exterior_factors():
    space = TensorSpace([Factor.ext(1), Factor.ext(1)], 2)
    swap = permute_factors(space, (1, 0))
    assert swap.apply({((1,), (2,)): 1}) == {((2,), (1,)): -1}
    with pytest.raises(PreconditionError):
        permute_factors(space, (0, 0))


def test_sym_product():
    mult = sym_product(1, 1, 2)
    assert mult.image(((2,), (1,))) == {((1, 2),): 1}


def test_left_inverse_and_span():
    inclusion = schur_module((2, 1), 3).image_sym
    assert inclusion.left_inverse() @ inclusion == LinMap.identity(
        inclusion.source
    )
    assert same_span(inclusion, inclusion.scaled(3))


# =============================================================================
# COASSOCIATIVITY
# =============================================================================


@given(
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=0, max_value=4),
    st.integers(min_value=1, max_value=4),
)
def test_coassociativity(l, a, b, n):
    if a + b > l:
        with pytest.raises(PreconditionError):
            coassociativity_paths(l, a, b, n)
        return
    report = verify_coassociativity(l, a, b, n)
    assert report.passed
    assert report.instance == {"l": l, "a": a, "b": b, "n": n}


# =============================================================================
# SCHUR MODULES AND PIERI INCLUSIONS
# =============================================================================


def test_columns_to_rows():
    antisym = columns_to_rows((1, 1), 2)
    assert antisym.image(((1, 2),)) == {((1,), (2,)): 1, ((2,), (1,)): -1}


@pytest.mark.parametrize("lam, n", [((2, 1), 3), ((2, 2), 3), ((1,), 2)])
def test_schur_module(lam, n):
    module = schur_module(lam, n)
    assert module.dim == dim_schur(lam, n)
    assert module.image_sym.is_injective


@pytest.mark.parametrize("n", [1, 2, 3])
def test_schur_ranks(n):
    for lam in partitions_up_to(5, max_rows=n):
        module = schur_module(lam, n)
        assert module.dim == len(semistandard_tableaux(lam, n))
        assert module.image_sym.rank == dim_schur(lam, n)


def test_schur_module_vanishes():
    with pytest.raises(PreconditionError):
        schur_module((1, 1, 1), 2)


def test_pieri_horizontal_row():
    inclusion = pieri_inclusion((2,), (2, 2), "sym", 2)
    image = inclusion.image((highest_tableau((2, 2)),))
    assert image == {
        ((1, 1), (2, 2)): 1,
        ((1, 2), (1, 2)): -2,
        ((2, 2), (1, 1)): 1,
    }


def test_pieri_two_boxes():
    inclusion = pieri_inclusion((1,), (2, 1), PieriMode.SYM, 2)
    image = inclusion.image((highest_tableau((2, 1)),))
    assert image == {((1,), (1, 2)): 1, ((2,), (1, 1)): -1}


def test_pieri_single_box():
    inclusion = pieri_inclusion((2,), (2, 1), PieriMode.SYM, 2)
    image = inclusion.image((highest_tableau((2, 1)),))
    assert image == {((1, 1), (2,)): 1, ((1, 2), (1,)): -1}


def _expand(terms):
    found = {}
    for coeff, first, second in terms:
        key = (tuple(sorted(first)), tuple(sorted(second)))
        found[key] = found.get(key, 0) + coeff
    return {key: coeff for key, coeff in found.items() if coeff}


def _two_rows(tableau):
    """``ab|cd -> ab (x) cd - ad (x) cb - cb (x) ad + cd (x) ab``."""
    (a, b), (c, d) = tableau.rows
    return _expand(
        [
            (1, (a, b), (c, d)),
            (-1, (a, d), (c, b)),
            (-1, (c, b), (a, d)),
            (1, (c, d), (a, b)),
        ]
    )


def _hook(tableau):
    """``ab|c -> c (x) ab - a (x) cb``."""
    (a, b), (c,) = tableau.rows
    return _expand([(1, (c,), (a, b)), (-1, (a,), (c, b))])


@pytest.mark.parametrize(
    "lam, eta, formula, count, scalar",
    [((2,), (2, 2), _two_rows, 6, 1), ((1,), (2, 1), _hook, 8, -1)],
)
def test_pieri_matches_the_closed_formulas(lam, eta, formula, count, scalar):
    inclusion = pieri_inclusion(lam, eta, PieriMode.SYM, 3)
    tableaux = semistandard_tableaux(eta, 3)
    assert len(tableaux) == count
    for tableau in tableaux:
        expected = {
            key: scalar * coeff for key, coeff in formula(tableau).items()
        }
        assert inclusion.image((tableau,)) == expected


def test_schur_image_of_two_rows():
    module = schur_module((2, 2), 3)
    assert len(module.basis) == 6
    for tableau in module.basis:
        assert module.image_sym.image((tableau,)) == _two_rows(tableau)


def test_pieri_exterior_box():
    inclusion = pieri_inclusion((1,), (1, 1), PieriMode.EXT, 2)
    image = inclusion.image((highest_tableau((1, 1)),))
    assert image == {((1,), (2,)): 1, ((2,), (1,)): -1}


@pytest.mark.parametrize(
    "lam, eta, mode",
    [
        ((2, 1), (3, 1), "sym"),
        ((2, 1), (3, 2), "ext"),
        ((1,), (2, 1), "ext"),
        ((1, 1), (2, 1), "sym"),
    ],
)
def test_pieri_inclusions_are_injective(lam, eta, mode):
    inclusion = pieri_inclusion(lam, eta, mode, 3)
    assert inclusion.rank == dim_schur(eta, 3)
    in_coordinates = pieri_inclusion(lam, eta, mode, 3, coordinates=True)
    assert in_coordinates.rank == dim_schur(eta, 3)


def test_pieri_needs_a_strip():
    with pytest.raises(PreconditionError):
        pieri_inclusion((2,), (1, 1), "sym", 2)
    with pytest.raises(PreconditionError):
        pieri_inclusion((1,), (3,), "ext", 2)


def test_sam_composite_survives():
    report = verify_sam((1, 1), (2, 1), (2, 1, 1), 3)
    assert report.passed
    assert report.check == "sam"


def test_sam_rejects_non_strip():
    with pytest.raises(PreconditionError):
        verify_sam((1, 1), (2, 1), (2, 2), 3)


# =============================================================================
# LABELED DIAGRAM EMBEDDINGS
# =============================================================================


EMBEDDING_GRID = [
    (lam, k, n)
    for n in (1, 2, 3)
    for lam in partitions_up_to(3, max_rows=n)
    for k in (0, 1, 2)
]


@pytest.mark.parametrize("lam, k, n", EMBEDDING_GRID)
def test_equivalent_diagrams_share_a_span(lam, k, n):
    for outside in outside_diagrams(lam, k, max_rows=n):
        inside = normalize_labels(outside)
        first = labeled_embedding(outside, "outside", n)
        second = labeled_embedding(inside, "inside", n)
        assert first.rank == dim_schur(outside.shape, n)
        assert same_span(first, second)


def test_slide_keeps_the_embedding():
    outside = LabeledDiagram(
        base=(1,),
        shape=(2, 1, 1),
        marks={(1, 2): "W", (2, 1): "W", (3, 1): "V"},
    )
    inside = normalize_labels(outside)
    assert inside.vbox == (2, 1)
    assert same_span(
        labeled_embedding(outside, "outside", 3),
        labeled_embedding(inside, "inside", 3),
    )


def test_both_readings_of_one_diagram_agree():
    diagram = LabeledDiagram(
        base=(1,), shape=(2, 1), marks={(1, 2): "W", (2, 1): "V"}
    )
    outside = labeled_embedding(diagram, "outside", 2)
    inside = labeled_embedding(diagram, "inside", 2)
    assert outside.rank == 2
    assert same_span(outside, inside)


def test_embedding_needs_matching_bracketing():
    inside = LabeledDiagram(
        base=(1,), shape=(3,), marks={(1, 2): "V", (1, 3): "W"}
    )
    with pytest.raises(InvalidDiagramError):
        labeled_embedding(inside, "outside", 2)


def test_caches_are_bounded():
    schur_module((2, 1), 3)
    pieri_inclusion((1,), (2, 1), PieriMode.SYM, 3)
    for cached in (schur._schur_module, schur._pieri_inclusion):
        assert cached.cache_info().maxsize == schur.CACHE_SIZE
        assert cached.cache_info().currsize >= 1
