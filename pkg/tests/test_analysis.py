import random
from itertools import combinations

import pytest

from udlrc import (
    CountOutOfRange,
    CoverTrace,
    LocalityClass,
    LocalitySpec,
    Matrix,
    OrderedConditionRequired,
    PrimeField,
    RankDeficientGenerator,
    TooLarge,
    build_code,
    certify_distance_optimal,
    check_cover_trace,
    class_cover_trace,
    class_rank_caps,
    class_symbols,
    decodable,
    distance_bound_udlrc,
    distance_bound_measured,
    erank,
    grank,
    locality_witness_search,
    min_distance_oracle,
    punctured_code_profile,
    rank_deficiency_witness,
    tightness_budget_size,
    transform_pattern,
    validate_spec,
    worst_case_pattern,
)
from conftest import REVERSED_SPEC

F5 = PrimeField(5)


def test_grank_basics(ref_instance):
    assert grank(ref_instance.gen, ()) == 0
    assert grank(ref_instance.gen, range(8)) == 4
    assert grank(ref_instance.gen, (0, 1, 2, 3)) == 2
    assert grank(ref_instance.gen, (4, 5, 6, 7)) == 3
    with pytest.raises(IndexError):
        grank(ref_instance.gen, (9,))


def test_grank_equals_capped_erank_exhaustive(ref_instance, single_instance):
    # the restricted generator rank is the point rank capped at k
    for inst in (ref_instance, single_instance):
        n, k = inst.n, inst.k
        for size in range(n + 1):
            for subset in combinations(range(n), size):
                assert grank(inst.gen, subset) == min(k, erank(inst, subset))


def test_decodable_predicates_agree(ref_instance):
    for size in range(9):
        for subset in combinations(range(8), size):
            by_grank = decodable(ref_instance.gen, subset)
            by_erank = erank(ref_instance, subset) >= ref_instance.k
            assert by_grank == by_erank
    assert decodable(ref_instance.gen, range(8))
    assert not decodable(ref_instance.gen, (0, 1, 2))  # fewer than k symbols


def test_min_distance_oracle_identity_and_budget():
    ident = Matrix.identity(F5, 3)
    cert = min_distance_oracle(ident)
    assert cert.d == 1
    assert cert.witness_rank == 2
    with pytest.raises(TooLarge):
        min_distance_oracle(ident, budget=2)
    deficient = Matrix(F5, [[1, 2], [2, 4]])
    with pytest.raises(RankDeficientGenerator):
        min_distance_oracle(deficient)


def test_min_distance_oracle_reference(ref_instance):
    cert = min_distance_oracle(ref_instance.gen)
    assert cert.d == 3
    assert len(cert.witness) == 5
    assert cert.witness_rank == 3
    # no larger set is rank deficient
    for subset in combinations(range(8), 6):
        assert grank(ref_instance.gen, subset) == 4


def _weight_enumeration_distance(gen):
    """Independent oracle: smallest weight over all nonzero codewords."""
    from itertools import product

    field = gen.field
    zero = field.zero
    best = None
    for message in product(field.elements(), repeat=gen.nrows):
        if all(m == zero for m in message):
            continue
        codeword = gen.left_multiply(list(message))
        weight = sum(1 for v in codeword if v != zero)
        best = weight if best is None else min(best, weight)
    return best


def test_oracle_agrees_with_weight_enumeration():
    from udlrc import ExtField, lift_to_ext, mds_local_generator, moore_matrix

    small = [
        mds_local_generator(2, 2, F5),
        mds_local_generator(2, 3, F5),
        mds_local_generator(3, 2, F5),
        mds_local_generator(1, 4, PrimeField(7)),
        Matrix.identity(F5, 3),
        Matrix(F5, [[1, 1, 1, 1, 0], [0, 1, 2, 3, 0]]),
    ]
    f8 = ExtField(PrimeField(2), 3)
    pts = [f8.one, f8.alpha, f8.frobenius(f8.alpha)]
    small.append(moore_matrix(f8, pts, 2).transpose())
    binary_parity = Matrix(PrimeField(2), [[1, 0, 1], [0, 1, 1]])
    small.append(lift_to_ext(f8, binary_parity))
    for gen in small:
        assert min_distance_oracle(gen).d == _weight_enumeration_distance(gen)


def test_full_pipeline_on_a_ternary_field():
    spec = LocalitySpec(
        classes=(LocalityClass.from_groups(1, 3, 2), LocalityClass.from_groups(2, 2, 1)),
        k=3,
        q=3,
        t=4,
    )
    inst = build_code(validate_spec(spec))
    cert = min_distance_oracle(inst.gen)
    assert cert.d == distance_bound_udlrc(spec).value
    assert certify_distance_optimal(inst)


def test_decode_sampled_patterns_three_classes(three_instance, rng):
    from udlrc import ErasurePattern, Undecodable, decode_erasures, encode, erasure_decodable

    field = three_instance.field
    n, k = three_instance.n, three_instance.k
    message = [field.random_element(rng) for _ in range(k)]
    codeword = encode(three_instance, message)
    for _ in range(200):
        erased = rng.sample(range(n), rng.randrange(n + 1))
        pattern = ErasurePattern.from_erased(n, erased)
        received = {i: codeword[i] for i in pattern.remaining}
        if erasure_decodable(three_instance, pattern):
            result = decode_erasures(three_instance, received, pattern)
            assert result.message == tuple(message)
            assert result.codeword == tuple(codeword)
        else:
            with pytest.raises(Undecodable):
                decode_erasures(three_instance, received, pattern)


def test_oracle_matches_deficiency_characterization(single_instance):
    # d >= n - size + 1 exactly when every size-subset keeps full rank
    gen = single_instance.gen
    n, k = single_instance.n, single_instance.k
    d = min_distance_oracle(gen).d
    for size in range(n + 1):
        all_full = all(grank(gen, s) == k for s in combinations(range(n), size))
        assert all_full == (d >= n - size + 1)


def test_redundancy_inequality_on_deficient_sets(ref_instance):
    # d <= n - k + 1 - (|T| - rank) whenever the restriction is deficient
    gen = ref_instance.gen
    n, k = 8, 4
    d = min_distance_oracle(gen).d
    rng = random.Random(5)
    subsets = [tuple(sorted(rng.sample(range(n), rng.randrange(n + 1)))) for _ in range(200)]
    for subset in subsets:
        r = grank(gen, subset)
        if r <= k - 1:
            assert d <= n - k + 1 - (len(subset) - r)


def test_punctured_code_profile_zero_column():
    gen = Matrix(F5, [[0, 1, 0], [0, 0, 1]])
    assert punctured_code_profile(gen, (0,)) == (0, None)
    dim, dist = punctured_code_profile(gen, (0, 1, 2))
    assert (dim, dist) == (2, 1)


def test_locality_witness_search_reference(ref_instance):
    spec = ref_instance.spec
    for l, group in enumerate(ref_instance.layout.groups):
        c = spec.classes[ref_instance.layout.class_of[l]]
        for i in group:
            witness = locality_witness_search(
                ref_instance.gen, i, class_symbols(ref_instance, ref_instance.layout.class_of[l] + 1), c.r, c.delta
            )
            assert witness == group  # the containing group is the smallest witness here


def test_locality_witness_search_none_on_identity():
    ident = Matrix.identity(F5, 3)
    assert locality_witness_search(ident, 0, (0, 1, 2), 1, 2) is None


def test_locality_witness_search_zero_column_cases():
    # a zero column never carries distance by itself; larger sets can
    gen = Matrix(F5, [[0, 1, 1]])
    assert locality_witness_search(gen, 0, (0, 1, 2), 2, 2) == (0, 1, 2)
    gen2 = Matrix(F5, [[0, 1, 0], [0, 0, 1]])
    assert locality_witness_search(gen2, 0, (0, 1, 2), 1, 2) is None


def test_locality_witness_search_guards():
    gen = Matrix.identity(F5, 3)
    with pytest.raises(ValueError):
        locality_witness_search(gen, 5, (0, 1, 2), 1, 2)
    wide = Matrix.identity(F5, 3)
    with pytest.raises(TooLarge):
        locality_witness_search(wide, 0, tuple(range(3)), 1, 2, max_support=2)


def test_cover_trace_reference(ref_instance):
    trace1 = class_cover_trace(ref_instance, 1)
    assert trace1.steps == 1
    assert trace1.sets[-1] == frozenset((0, 1, 2, 3))
    assert trace1.granks == (0, 2)
    trace2 = class_cover_trace(ref_instance, 2)
    assert trace2.steps == 1
    assert trace2.granks == (0, 3)


def test_cover_trace_multi_step(single_instance):
    trace = class_cover_trace(single_instance, 1)
    assert trace.steps == 2
    assert trace.picks == (0, 3)
    assert trace.granks == (0, 2, 3)
    assert trace.sizes == (0, 3, 6)
    # chain is nested
    for earlier, later in zip(trace.sets, trace.sets[1:]):
        assert earlier < later


def test_cover_trace_claims_on_all_instances(all_instances):
    for inst in all_instances:
        for j, c in enumerate(inst.spec.classes, 1):
            trace = class_cover_trace(inst, j)
            assert check_cover_trace(trace, c.r, c.delta) == []


def test_cover_trace_claims_catch_fakes():
    fake = CoverTrace(
        class_index=1,
        sets=(frozenset(), frozenset((0, 1))),
        picks=(0,),
        sizes=(0, 2),
        granks=(0, 2),
    )
    # size gain equals rank gain: the redundancy claim must flag it
    violations = check_cover_trace(fake, r=2, delta=2)
    assert any("size gain" in v for v in violations)
    slow = CoverTrace(
        class_index=1,
        sets=(frozenset(), frozenset(range(6))),
        picks=(0,),
        sizes=(0, 6),
        granks=(0, 4),
    )
    violations = check_cover_trace(slow, r=2, delta=2)
    assert any("rank gain" in v for v in violations)
    # claims a rank-4 class covered in a single step with r = 2
    short = CoverTrace(
        class_index=1,
        sets=(frozenset(), frozenset(range(8))),
        picks=(0,),
        sizes=(0, 8),
        granks=(0, 4),
    )
    assert any("step count" in v for v in check_cover_trace(short, r=2, delta=2))


def test_tight_step_count(single_instance):
    trace = class_cover_trace(single_instance, 1)
    # class rank 3, r = 2: the floor of two steps is met exactly
    assert trace.steps == 2


def test_class_rank_caps(ref_instance, ref_full_instance, all_instances):
    rows = class_rank_caps(ref_instance)
    assert [(r.grank, r.cap) for r in rows] == [(2, 2), (3, 3)]
    assert all(r.within_cap for r in rows)
    full_rows = class_rank_caps(ref_full_instance)
    assert all(r.grank == r.cap for r in full_rows)
    for inst in all_instances:
        rows = class_rank_caps(inst)
        assert all(r.within_cap for r in rows)
        assert sum(r.grank for r in rows) >= inst.k


def test_rank_deficiency_witness_reference(ref_instance):
    witness = rank_deficiency_witness(ref_instance)
    assert witness == (0, 1, 2, 3)
    assert grank(ref_instance.gen, witness) == 2


def test_rank_deficiency_witness_all_instances(all_instances):
    for inst in all_instances:
        witness = rank_deficiency_witness(inst)
        wrank = grank(inst.gen, witness)
        assert wrank <= inst.k - 1
        d = min_distance_oracle(inst.gen).d
        assert inst.n - len(witness) >= d
        assert d <= inst.n - inst.k + 1 - (len(witness) - wrank)


def test_rank_deficiency_witness_k_one():
    tiny = LocalitySpec(classes=(LocalityClass.from_groups(1, 2, 1),), k=1, q=5, t=1)
    inst = build_code(validate_spec(tiny))
    assert rank_deficiency_witness(inst) == ()


def test_measured_bound_sound_on_reference(ref_instance):
    granks = [grank(ref_instance.gen, class_symbols(ref_instance, j)) for j in (1, 2)]
    bound = distance_bound_measured(ref_instance.spec, granks)
    assert bound.value >= min_distance_oracle(ref_instance.gen).d
    assert bound.value == distance_bound_udlrc(ref_instance.spec).value


def test_worst_case_pattern(ref_instance):
    layout = ref_instance.layout
    assert worst_case_pattern(layout, 0).remaining == tuple(range(8))
    assert worst_case_pattern(layout, 8).remaining == ()
    pattern = worst_case_pattern(layout, 3)
    assert pattern.remaining == (0, 1, 2, 3, 4)
    assert erank(ref_instance, pattern.remaining) == 3
    with pytest.raises(CountOutOfRange):
        worst_case_pattern(layout, 9)
    with pytest.raises(CountOutOfRange):
        worst_case_pattern(layout, -1)


def test_worst_case_pattern_minimizes_rank(ref_instance):
    layout = ref_instance.layout
    for e in range(9):
        floor_rank = erank(ref_instance, worst_case_pattern(layout, e).remaining)
        for remaining in combinations(range(8), 8 - e):
            assert erank(ref_instance, remaining) >= floor_rank


def test_transform_pattern_terminates_at_greedy(ref_instance):
    layout = ref_instance.layout
    # already greedy: nothing recorded
    assert transform_pattern(layout, (0, 1, 2, 3, 4)) == []
    # group-2 symbols migrate into group 1, then align inside the group
    steps = transform_pattern(layout, (5, 7))
    assert steps[-1].remaining == (0, 1)
    steps = transform_pattern(layout, (0, 1, 2, 3, 5, 7))
    assert steps[-1].remaining == (0, 1, 2, 3, 4, 5)
    for remaining in combinations(range(8), 4):
        steps = transform_pattern(layout, remaining)
        expected = worst_case_pattern(layout, 4).remaining
        final = steps[-1].remaining if steps else remaining
        assert tuple(final) == expected


def test_transform_pattern_rank_never_increases(ref_instance):
    layout = ref_instance.layout
    for size in range(9):
        for remaining in combinations(range(8), size):
            ranks = [erank(ref_instance, remaining)]
            for pattern in transform_pattern(layout, remaining):
                assert len(pattern.remaining) == size
                ranks.append(erank(ref_instance, pattern.remaining))
            assert all(a >= b for a, b in zip(ranks, ranks[1:]))


def test_certify_distance_optimal(all_instances):
    for inst in all_instances:
        assert certify_distance_optimal(inst)


@pytest.mark.parametrize(
    "classes,k,q",
    [
        (((1, 2, 2), (2, 2, 2)), 4, 5),
        (((1, 2, 2), (2, 2, 2)), 6, 5),
        (((1, 3, 1), (1, 2, 2)), 2, 5),
        (((2, 3, 1), (2, 2, 2)), 5, 5),
        (((1, 4, 1), (2, 3, 1), (3, 2, 1)), 4, 7),
        (((2, 2, 3),), 5, 5),
        (((1, 3, 3),), 2, 3),
        (((3, 3, 1),), 3, 5),
    ],
)
def test_distance_cap_tight_across_ordered_shapes(classes, k, q):
    spec = LocalitySpec(
        classes=tuple(LocalityClass.from_groups(r, d, m) for r, d, m in classes),
        k=k,
        q=q,
        t=sum(r * m for r, _, m in classes),
    )
    inst = build_code(validate_spec(spec))
    assert spec.ordered_condition
    cert = min_distance_oracle(inst.gen)
    assert cert.d == distance_bound_udlrc(spec).value
    assert certify_distance_optimal(inst)


def test_certify_requires_ordered_condition():
    inst = build_code(validate_spec(REVERSED_SPEC))
    with pytest.raises(OrderedConditionRequired):
        certify_distance_optimal(inst)


def test_permuted_bound_is_the_tight_one_on_reversed_build():
    from udlrc import permuted_tightest_bound

    inst = build_code(validate_spec(REVERSED_SPEC))
    d = min_distance_oracle(inst.gen).d
    assert distance_bound_udlrc(REVERSED_SPEC).value == 4  # valid but loose
    assert permuted_tightest_bound(REVERSED_SPEC).value == d == 3


def test_transform_pattern_on_unequal_group_widths(three_instance):
    layout = three_instance.layout
    assert tuple(len(g) for g in layout.groups) == (3, 3, 4)
    n = three_instance.n
    for size in range(n + 1):
        for remaining in combinations(range(n), size):
            ranks = [erank(three_instance, remaining)]
            steps = transform_pattern(layout, remaining)
            for pattern in steps:
                assert len(pattern.remaining) == size
                ranks.append(erank(three_instance, pattern.remaining))
            assert all(a >= b for a, b in zip(ranks, ranks[1:]))
            final = steps[-1].remaining if steps else remaining
            assert tuple(final) == worst_case_pattern(layout, n - size).remaining


def test_tightness_budget_size(ref_instance):
    tau = tightness_budget_size(ref_instance)
    assert tau == 6
    greedy = worst_case_pattern(ref_instance.layout, ref_instance.n - tau)
    # the greedy remaining set of the critical size reaches rank k exactly
    assert erank(ref_instance, greedy.remaining) == ref_instance.k
    assert ref_instance.n - tau + 1 == distance_bound_udlrc(ref_instance.spec).value
