"""Core arithmetic, orders, division, Buchberger, elimination."""

import pytest
from fractions import Fraction

from reesdet.poly import (
    DomainError,
    GT,
    LT,
    PolyRing,
    PrimeField,
    QQ,
    Tvar,
    buchberger,
    compare,
    division,
    eliminate,
    normal_form,
    parse_poly,
    permuted_lex,
    s_polynomial,
    sigma_grevlex,
    tau_lex,
    tvar,
    weight_order,
    xvar,
)


def ring_2x3(r=1, tuples=((1, 2), (1, 3), (2, 3))):
    xs = [xvar(i, j) for i in (1, 2) for j in (1, 2, 3)]
    ts = [tvar(k) for k in range(1, r + 1)]
    Ts = [Tvar(c, k) for c in tuples for k in range(1, r + 1)]
    return PolyRing(xs + ts + Ts, field=QQ, name="R")


class TestFields:
    def test_rational_ops(self):
        assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
        assert QQ.div(QQ.one, Fraction(-4)) == Fraction(-1, 4)
        assert QQ.is_zero(QQ.sub(QQ.one, QQ.one))

    def test_prime_field(self):
        F = PrimeField(7)
        assert F.mul(3, 5) == 1
        assert F.inv(3) == 5
        assert F.convert(-1) == 6
        with pytest.raises(ZeroDivisionError):
            F.inv(0)

    def test_prime_field_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeField(6)


class TestOrders:
    def test_row_lex_on_x(self):
        R = ring_2x3()
        tau = tau_lex(R)
        # row-major: earlier row wins, then earlier column
        assert compare(tau, R.x(1, 2).leading_monomial(tau),
                       R.x(2, 1).leading_monomial(tau)) == GT
        assert compare(tau, R.x(1, 1).leading_monomial(tau),
                       R.x(1, 2).leading_monomial(tau)) == GT

    def test_order_rejects_uncovered_variable(self):
        R = ring_2x3()
        tau = tau_lex(R)
        with pytest.raises(DomainError):
            tau.key(R.t(1).leading_monomial(R.display_order))

    def test_T_order_prefers_smaller_index_tuple(self):
        R = ring_2x3(r=2)
        sigma = sigma_grevlex(R)
        (a,) = R.T((1, 2), 2).terms
        (b,) = R.T((1, 3), 1).terms
        # index tuple (1,2,2) is lex-smaller than (1,3,1), so T[1 2;2] is larger
        assert compare(sigma, a, b) == GT

    def test_weight_order_guard(self):
        R = ring_2x3()
        tau = tau_lex(R)
        coeffs = tuple(1 if p == 0 else 0 for p in range(R.nvars))
        w = weight_order(R, {0: 10}, tau, name="w", guard=(coeffs, 3))
        big = R.x(1, 1) ** 4
        with pytest.raises(DomainError):
            w.key(big.leading_monomial(R.display_order))

    def test_permuted_lex_respects_priority(self):
        R = ring_2x3()
        pos21 = R.position[xvar(2, 1)]
        pos11 = R.position[xvar(1, 1)]
        od = permuted_lex(R, [pos21, pos11])
        assert compare(od, R.x(2, 1).leading_monomial(od),
                       R.x(1, 1).leading_monomial(od)) == GT


class TestPolynomials:
    def test_parse_and_str_round_trip(self):
        R = ring_2x3()
        f = parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")
        assert f.to_str() == "x[1,1]*x[2,2] - x[1,2]*x[2,1]"
        assert parse_poly(R, f.to_str()) == f

    def test_parse_coefficients_and_powers(self):
        R = ring_2x3()
        f = parse_poly(R, "3/2*x[1,1]^2 - x[2,3]")
        (sq,) = (R.x(1, 1) ** 2).terms
        assert f.coefficient(sq) == Fraction(3, 2)
        assert f.total_degree() == 2

    def test_parse_rejects_dangling_operator(self):
        R = ring_2x3()
        with pytest.raises(ValueError):
            parse_poly(R, "x[1,1] +")

    def test_arithmetic(self):
        R = ring_2x3()
        a, b = R.x(1, 1), R.x(2, 2)
        assert (a + b) - b == a
        assert (a * b).total_degree() == 2
        assert (a - a).is_zero()
        assert (a + b) * (a - b) == a * a - b * b


class TestDivision:
    def test_normal_form_of_diagonal(self):
        R = ring_2x3()
        tau = tau_lex(R)
        minor = parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")
        f = R.x(1, 1) * R.x(2, 2)
        assert normal_form(f, [minor], tau) == R.x(1, 2) * R.x(2, 1)

    def test_division_identity(self):
        R = ring_2x3()
        tau = tau_lex(R)
        g1 = parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")
        g2 = parse_poly(R, "x[1,2]*x[2,3] - x[1,3]*x[2,2]")
        f = g1 * R.x(1, 3) + g2 * R.x(2, 1) + R.x(1, 1)
        qs, rem = division(f, [g1, g2], tau, with_quotients=True)
        assert qs[0] * g1 + qs[1] * g2 + rem == f
        # no remainder term is divisible by a leading term
        for mono in rem.terms:
            for g in (g1, g2):
                assert PolyRing.mono_div(mono, g.leading_monomial(tau)) is None

    def test_s_polynomial_of_zero_raises(self):
        R = ring_2x3()
        with pytest.raises(ValueError):
            s_polynomial(R.zero(), R.one(), tau_lex(R))


class TestBuchberger:
    def test_two_by_three_minors_are_groebner(self):
        R = ring_2x3()
        tau = tau_lex(R)
        gens = [
            parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
            parse_poly(R, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
            parse_poly(R, "x[1,2]*x[2,3] - x[1,3]*x[2,2]"),
        ]
        gb = buchberger(gens, tau)
        assert gb.complete
        assert len(gb) == 3
        assert sorted(g.to_str(tau) for g in gb) == sorted(
            g.to_str(tau) for g in gens
        )

    def test_reduced_basis_is_canonical(self):
        R = ring_2x3()
        tau = tau_lex(R)
        g1 = parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]")
        g2 = g1 + (R.x(1, 2) * R.x(2, 3) - R.x(1, 3) * R.x(2, 2))
        gb1 = buchberger([g1, g2], tau)
        gb2 = buchberger([g2, g1], tau)
        assert [p.to_str(tau) for p in gb1] == [p.to_str(tau) for p in gb2]

    def test_degree_bound_marks_incomplete(self):
        R = ring_2x3()
        tau = tau_lex(R)
        gens = [
            parse_poly(R, "x[1,1]*x[2,2] - x[1,2]*x[2,1]"),
            parse_poly(R, "x[1,1]*x[2,3] - x[1,3]*x[2,1]"),
        ]
        gb = buchberger(gens, tau, degree_bound=2)
        assert not gb.complete
        assert gb.skipped_pairs > 0


class TestEliminate:
    def test_single_generator_eliminates_to_nothing(self):
        R = ring_2x3(r=1, tuples=((1, 2),))
        g = R.T((1, 2), 1) - R.x(1, 1) * R.x(2, 2) * R.t(1)
        kill = list(R.x_positions) + list(R.t_positions)
        eb = eliminate([g], kill)
        assert list(eb) == [] and eb.complete

    def test_toric_kernel_of_2x4_diagonals(self):
        xs = [xvar(i, j) for i in (1, 2) for j in range(1, 5)]
        ts = [tvar(1)]
        cols = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        Ts = [Tvar(c, 1) for c in cols]
        R = PolyRing(xs + ts + Ts, field=QQ, name="R")
        gens = []
        for c in cols:
            diag = R.x(1, c[0]) * R.x(2, c[1])
            gens.append(R.T(c, 1) - diag * R.t(1))
        kill = list(R.x_positions) + list(R.t_positions)
        eb = eliminate(gens, kill)
        assert eb.complete
        assert [g.to_str(eb.order) for g in eb] == [
            "T[1 4;1]*T[2 3;1] - T[1 3;1]*T[2 4;1]"
        ]
