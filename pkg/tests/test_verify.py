"""The cross-check batteries and their random input generators."""

import random

import pytest

from subres import DomainError, MultiRootSet, Rat
from subres.serialize import parse_system
from subres.verify import (
    Check,
    mv_checks,
    random_pair,
    random_rootset,
    resolved_groups,
    univariate_checks,
)
from test_serialize import circle_line_doc


def rs(*pairs):
    return MultiRootSet([(Rat(r), m) for r, m in pairs])


class TestUnivariateBattery:
    def test_mixed_multiplicities_all_green(self):
        checks = univariate_checks(rs((0, 2), (1, 1)), rs((2, 2), (3, 2)))
        assert checks and all(c.ok for c in checks)
        names = [c.name for c in checks]
        assert len(names) == len(set(names))

    def test_orientation_swap(self):
        big_first = univariate_checks(rs((2, 2), (3, 2)), rs((0, 2), (1, 1)))
        small_first = univariate_checks(rs((0, 2), (1, 1)), rs((2, 2), (3, 2)))
        assert [c.name for c in big_first] == [c.name for c in small_first]
        assert all(c.ok for c in big_first)

    def test_simple_disjoint_pair_adds_double_sums(self):
        checks = univariate_checks(rs((0, 1), (1, 1)), rs((2, 1), (3, 1), (5, 1)))
        assert all(c.ok for c in checks)
        names = [c.name for c in checks]
        assert any("double sum" in n for n in names)
        assert any("pole formula" in n for n in names)

    def test_multiple_roots_skip_double_sums(self):
        checks = univariate_checks(rs((0, 2)), rs((2, 2)))
        names = [c.name for c in checks]
        assert not any("double sum" in n for n in names)

    def test_shared_root_skips_pole_formula(self):
        checks = univariate_checks(rs((0, 1), (1, 1)), rs((1, 1), (2, 1), (3, 1)))
        assert all(c.ok for c in checks)
        assert not any("pole formula" in c.name for c in checks)

    def test_failed_check_carries_detail(self):
        assert Check("x", False, "why").detail == "why"
        assert Check("x", True).detail == ""


class TestMVBattery:
    def test_circle_line_all_green(self):
        checks = mv_checks(parse_system(circle_line_doc()))
        assert checks and all(c.ok for c in checks), [c for c in checks if not c.ok]
        names = [c.name for c in checks]
        assert "dual-basis quotient matches the Macaulay subresultant up to sign" in names

    def test_without_roots_runs_matrix_checks_only(self):
        raw = circle_line_doc()
        del raw["roots"]
        checks = mv_checks(parse_system(raw))
        assert all(c.ok for c in checks)
        assert not any("dual" in c.name for c in checks)

    def test_requires_t_and_s(self):
        raw = circle_line_doc()
        del raw["t"]
        with pytest.raises(DomainError):
            mv_checks(parse_system(raw))
        raw = circle_line_doc()
        del raw["S"]
        with pytest.raises(DomainError):
            mv_checks(parse_system(raw))

    def test_singular_override_reports_failure_not_crash(self):
        raw = circle_line_doc()
        raw["T_override"] = {"2": [[1, 1]]}
        checks = mv_checks(parse_system(raw))
        bad = [c for c in checks if not c.ok]
        assert bad
        assert any("V_T is singular" in c.detail for c in bad)


class TestResolvedGroups:
    def test_fills_missing_duals(self):
        raw = circle_line_doc()
        raw["roots"] = [{"point": ["0", "0"]}, {"point": ["0", "2"]}]
        groups = resolved_groups(parse_system(raw))
        assert [len(dual) for _, dual in groups] == [3, 1]
        assert all(dual[0].is_evaluation() for _, dual in groups)

    def test_preserves_provided_duals(self):
        doc = parse_system(circle_line_doc())
        groups = resolved_groups(doc)
        assert groups[0][1] == doc.roots[0][1]

    def test_requires_root_data(self):
        raw = circle_line_doc()
        del raw["roots"]
        with pytest.raises(DomainError):
            resolved_groups(parse_system(raw))


class TestRandomInputs:
    def test_rootset_respects_bounds(self):
        rng = random.Random(3)
        for _ in range(20):
            a = random_rootset(rng, 5, max_mult=2)
            assert a.total == 5
            assert all(1 <= m <= 2 for _, m in a)

    def test_rootset_avoid(self):
        rng = random.Random(4)
        avoid = [Rat(1), Rat(2), Rat(-1, 2)]
        for _ in range(20):
            a = random_rootset(rng, 4, avoid=avoid)
            assert not any(r in avoid for r, _ in a)

    def test_pair_flags(self):
        rng = random.Random(6)
        for _ in range(20):
            a, b = random_pair(rng, max_degree=5, disjoint=True, simple=True)
            assert a.total <= b.total
            assert all(m == 1 for _, m in a) and all(m == 1 for _, m in b)
            assert not any(ra == rb for ra, _ in a for rb, _ in b)

    def test_seeded_determinism(self):
        one = random_pair(random.Random(11))
        two = random_pair(random.Random(11))
        assert one == two

    def test_degree_validation(self):
        with pytest.raises(DomainError):
            random_rootset(random.Random(0), 0)
