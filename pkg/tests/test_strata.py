from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hassett_kit.errors import IndexOutOfRange, NotAdmissible, NotAReduction
from hassett_kit.models_strata import NORMAL_BUNDLE_DESCRIPTOR, Tag
from hassett_kit.strata.operations import (boundary_divisor, canonical_form,
                                           canonical_subsets, classify_subset,
                                           contracted_divisors, count_by_tag,
                                           factor_reduction,
                                           reduction_is_isomorphism)
from hassett_kit.weights.operations import validate_weight_data
from strategies import genus_zero_weights, permutations_of, weight_data

THIRD = '1/3'
DM6 = validate_weight_data(0, [1] * 6)
SEGRE_WEIGHTS = validate_weight_data(0, ['1'] + [THIRD] * 5)


class TestClassifySubset:

    def test_coincidence(self):
        assert classify_subset(SEGRE_WEIGHTS, {2, 3}) is Tag.COINCIDENCE

    def test_deligne_mumford_is_nodal(self):
        assert classify_subset(DM6, {1, 2, 3}) is Tag.NODAL

    def test_contracted(self):
        assert classify_subset(SEGRE_WEIGHTS, {2, 3, 4}) is Tag.CONTRACTED

    def test_heavy_pair_is_nodal(self):
        assert classify_subset(SEGRE_WEIGHTS, {1, 2}) is Tag.NODAL

    def test_heavy_triple_is_nodal(self):
        # only the canonical side is weighed, the light side {4, 5, 6} holds label 6
        assert classify_subset(SEGRE_WEIGHTS, {1, 2, 3}) is Tag.NODAL
        assert classify_subset(SEGRE_WEIGHTS, {4, 5, 6}) is Tag.NODAL
        assert classify_subset(SEGRE_WEIGHTS, {1, 5, 6}) is Tag.CONTRACTED

    def test_subsets_of_a_contracted_tail(self):
        assert classify_subset(SEGRE_WEIGHTS, {2, 3, 4}) is Tag.CONTRACTED
        for pair in combinations((2, 3, 4), 2):
            assert classify_subset(SEGRE_WEIGHTS, pair) is Tag.COINCIDENCE

    @pytest.mark.parametrize('subset', [{1}, {1, 2, 3, 4, 5}, set()])
    def test_nonexistent(self, subset):
        assert classify_subset(DM6, subset) is Tag.NONEXISTENT

    @pytest.mark.parametrize('subset', [{0, 1}, {1, 7}, [1, 1]])
    def test_index_out_of_range(self, subset):
        with pytest.raises(IndexOutOfRange):
            classify_subset(DM6, subset)

    def test_sum_two_weights_refused(self):
        w = validate_weight_data(0, [THIRD] * 6, 'sum_two')
        with pytest.raises(NotAdmissible):
            classify_subset(w, {1, 2})

    def test_canonical_form_avoids_last_label(self):
        assert canonical_form(DM6, {4, 5, 6}) == ((1, 2, 3), (4, 5, 6))
        w = validate_weight_data(1, [1, 1, 1])
        assert canonical_form(w, {2, 3}) == ((2, 3), (1,))

    def test_boundary_divisor_record(self):
        divisor = boundary_divisor(SEGRE_WEIGHTS, {2, 3})
        assert divisor.to_dict() == {'subset': [2, 3], 'tag': 'coincidence', 'codim': 1}
        assert divisor.body_markings == (1, 4, 5, 6)
        assert divisor.tail_genus == 0

    @pytest.mark.parametrize('weights,subset,record', [
        (SEGRE_WEIGHTS, {2, 3, 4, 5}, {'subset': [2, 3, 4, 5], 'tag': 'nodal', 'codim': 1}),
        (SEGRE_WEIGHTS, {3, 4, 5}, {'subset': [3, 4, 5], 'tag': 'contracted', 'codim': 2}),
        (DM6, {1}, {'subset': [1], 'tag': 'nonexistent', 'codim': None}),
    ])
    def test_record_codimension(self, weights, subset, record):
        assert boundary_divisor(weights, subset).to_dict() == record


class TestCounts:

    @pytest.mark.parametrize('n', range(4, 9))
    def test_deligne_mumford_nodal_count(self, n):
        counts = count_by_tag(validate_weight_data(0, [1] * n))
        assert counts['nodal'] == 2 ** (n - 1) - n - 1
        assert counts['nodal'] == len(canonical_subsets(validate_weight_data(0, [1] * n)))

    def test_segre_weights(self):
        # canonical subsets avoid 6: light pairs and triples inside {2..5}, the rest nodal
        assert count_by_tag(SEGRE_WEIGHTS) == {
            'nodal': 15,
            'coincidence': 6,
            'contracted': 4,
            'nonexistent': 0,
        }

    def test_positive_genus_subsets(self):
        w = validate_weight_data(1, [1, 1, 1])
        assert canonical_subsets(w) == [(1, 2), (1, 3), (2, 3), (1, 2, 3)]


class TestReduction:

    def test_ten_lines(self):
        steps = contracted_divisors(DM6, SEGRE_WEIGHTS)
        assert [step.tail for step in steps] == list(combinations(range(2, 7), 3))
        assert all(step.image_codimension == 2 for step in steps)
        assert all(step.normal_bundle_descriptor == NORMAL_BUNDLE_DESCRIPTOR for step in steps)
        assert all(step.divisor.tail_markings == step.tail for step in steps)
        assert all(step.divisor.tag is Tag.CONTRACTED for step in steps)

    def test_ten_lines_chain(self):
        chain = factor_reduction(DM6, SEGRE_WEIGHTS)
        assert len(chain) == 10
        assert chain[0].to_dict() == {'subset': [2, 3, 4], 'tag': 'contracted', 'codim': 2,
                                      'normal_bundle': NORMAL_BUNDLE_DESCRIPTOR}

    def test_identity_reduction(self):
        assert contracted_divisors(DM6, DM6) == []
        assert factor_reduction(SEGRE_WEIGHTS, SEGRE_WEIGHTS) == []

    def test_heavy_tail_not_contracted(self):
        a = validate_weight_data(1, [1, 1, 1, 1])
        b = validate_weight_data(1, ['1', '1/2', '1/2', '1/2'])
        assert contracted_divisors(a, b) == []

    def test_quadruple_before_triples(self):
        a = validate_weight_data(1, [1] * 5)
        b = validate_weight_data(1, ['1'] + ['1/4'] * 4)
        chain = factor_reduction(a, b)
        assert [step.tail for step in chain] == [(2, 3, 4, 5), (2, 3, 4), (2, 3, 5),
                                                 (2, 4, 5), (3, 4, 5)]
        assert [step.image_codimension for step in chain] == [3, 2, 2, 2, 2]

    def test_quarter_weights_not_admissible_in_genus_zero(self):
        with pytest.raises(NotAdmissible):
            validate_weight_data(0, ['1'] + ['1/4'] * 4)

    def test_not_a_reduction(self):
        with pytest.raises(NotAReduction):
            contracted_divisors(SEGRE_WEIGHTS, DM6)

    @pytest.mark.parametrize('genus,weights,expected', [
        (1, [1, '1/2'], True),
        (1, ['1/5'], True),
        (0, [1, 1, '1/2', '1/2', '1/2'], False),
    ])
    def test_isomorphism(self, genus, weights, expected):
        assert reduction_is_isomorphism(validate_weight_data(genus, weights)) is expected


class TestProperties:

    @given(weight_data().flatmap(
        lambda w: st.tuples(st.just(w), permutations_of(w.n),
                            st.sets(st.integers(1, w.n), min_size=2, max_size=w.n))))
    @settings(max_examples=200, deadline=None)
    def test_relabeling_equivariance(self, case):
        w, images, subset = case
        moved = {images[i - 1] for i in subset}
        assert classify_subset(w.relabel(images), moved) is classify_subset(w, subset)

    @given(genus_zero_weights().flatmap(
        lambda w: st.tuples(st.just(w), permutations_of(w.n - 1),
                            st.sets(st.integers(1, w.n), min_size=2, max_size=w.n))))
    @settings(max_examples=200, deadline=None)
    def test_relabeling_equivariance_in_genus_zero(self, case):
        # relabelings fixing n keep the canonical side
        w, images, subset = case
        images = images + (w.n,)
        moved = {images[i - 1] for i in subset}
        assert classify_subset(w.relabel(images), moved) is classify_subset(w, subset)

    @given(st.one_of(weight_data(), genus_zero_weights()))
    @settings(max_examples=100, deadline=None)
    def test_monotonicity(self, w):
        for subset in canonical_subsets(w):
            if classify_subset(w, subset) is not Tag.CONTRACTED:
                continue
            for smaller in range(2, len(subset)):
                for part in combinations(subset, smaller):
                    assert classify_subset(w, part) in (Tag.CONTRACTED, Tag.COINCIDENCE)

    @given(weight_data(), weight_data())
    @settings(max_examples=100, deadline=None)
    def test_steps_have_codimension_r_minus_one(self, a, b):
        if a.n != b.n or a.genus != b.genus:
            return
        top = validate_weight_data(a.genus, [max(x, y) for x, y in zip(a.values, b.values)])
        for step in factor_reduction(top, b):
            assert step.image_codimension == len(step.tail) - 1 >= 2
            assert b.subset_sum(step.tail) <= Fraction(1)
