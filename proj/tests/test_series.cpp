#include <doctest.h>

#include "logdeg/series.hpp"
#include "oracles.hpp"

#include <random>

using namespace logdeg;

TEST_CASE("laurent arithmetic basics") {
    QSeries a = QSeries::monomial('q', 1, Rat(1), 10);  // q
    QSeries one = QSeries::constant('q', Rat(1), 10);
    QSeries s = one + a;                                 // 1 + q
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 1);
    QSeries inv = s.inverse();                           // 1 - q + q^2 - ...
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(3) == -1);
    CHECK((s * inv).coeff(0) == 1);
    CHECK((s * inv).coeff(5) == 0);

    // inverse of q^-2(1 + q) has order 2
    QSeries t = s;
    t.min_exp -= 2;
    t.trunc -= 2;
    QSeries ti = t.inverse();
    CHECK(ti.order() == 2);
    CHECK((t * ti) == QSeries::constant('q', Rat(1), ti.trunc));
}

TEST_CASE("ring identities on random series") {
    std::mt19937 rng(7);
    auto rand_series = [&](long trunc) {
        QSeries s = QSeries::zero('q', trunc);
        for (long e = -2; e <= trunc; ++e) {
            long num = static_cast<long>(rng() % 7) - 3;
            if (num != 0) s.set(e, make_rat(num, 1 + static_cast<long>(rng() % 3)));
        }
        return s;
    };
    for (int i = 0; i < 25; ++i) {
        QSeries a = rand_series(8), b = rand_series(8), c = rand_series(8);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        if (!a.is_zero()) {
            QSeries prod = a * a.inverse();
            CHECK(prod == QSeries::constant('q', Rat(1), prod.trunc));
        }
    }
}

TEST_CASE("gaussian rational series and i*i = -1") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        GaussRat a(make_rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4),
                   make_rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4));
        GaussRat b(make_rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4),
                   make_rat(static_cast<long>(rng() % 9) - 4, 1 + rng() % 4));
        CHECK(a * b == b * a);
        CHECK(gauss_i() * gauss_i() * a == -a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("macmahon matches the plane-partition enumerator") {
    QSeries m = macmahon(10);
    for (long n = 0; n <= 10; ++n)
        CHECK(m.coeff(n) == Rat(oracles::plane_partition_count(n)));
    // spec values through order 4
    CHECK(m.coeff(0) == 1);
    CHECK(m.coeff(1) == 1);
    CHECK(m.coeff(2) == 3);
    CHECK(m.coeff(3) == 6);
    CHECK(m.coeff(4) == 13);
}

TEST_CASE("macmahon powers") {
    CHECK(macmahon_power(0, 6) == QSeries::constant('q', Rat(1), 6));
    QSeries m1 = macmahon_power(1, 2);
    CHECK(m1.coeff(0) == 1);
    CHECK(m1.coeff(1) == -1);
    CHECK(m1.coeff(2) == 3);
    QSeries prod = macmahon_power(-1, 8) * macmahon_power(1, 8);
    CHECK(prod == QSeries::constant('q', Rat(1), prod.trunc));
    // M(q)^3 termwise equals repeated multiplication
    QSeries m = macmahon(8);
    CHECK(m.pow(3) == m * m * m);
}

TEST_CASE("normalize_dt") {
    QSeries z0 = macmahon_power(2, 8);
    CHECK(normalize_dt(z0, z0) == QSeries::constant('q', Rat(1), 8));
    QSeries q = QSeries::monomial('q', 1, Rat(1), 8);
    CHECK(normalize_dt(q * z0, z0) == q);
    // multiply-then-divide round trip with a random polynomial
    QSeries f = QSeries::zero('q', 8);
    f.set(0, Rat(2));
    f.set(3, make_rat(-7, 2));
    f.set(5, Rat(1));
    CHECK(normalize_dt(z0 * f, z0) == f);
    CHECK_THROWS(normalize_dt(q, QSeries::zero('q', 8)));
}

TEST_CASE("rational expansion") {
    // q/(1+q)^2 = q - 2q^2 + 3q^3 - 4q^4 + ...
    RationalFunction f;
    f.num.c = {Rat(0), Rat(1)};
    f.den.c = {Rat(1), Rat(2), Rat(1)};
    QSeries s = expand_rational(f, 0, 6);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == -2);
    CHECK(s.coeff(3) == 3);
    CHECK(s.coeff(4) == -4);

    // 1/q is an exact single term
    RationalFunction g;
    g.num.c = {Rat(1)};
    g.den.c = {Rat(0), Rat(1)};
    QSeries sg = expand_rational(g, -3, 3);
    CHECK(sg.coeff(-1) == 1);
    CHECK(sg.coeff(0) == 0);
    CHECK(sg.coeff(1) == 0);

    // (1-q)/(1-q) = 1
    RationalFunction h;
    h.num.c = {Rat(1), Rat(-1)};
    h.den.c = {Rat(1), Rat(-1)};
    QSeries sh = expand_rational(h, 0, 5);
    CHECK(sh == QSeries::constant('q', Rat(1), 5));
}

TEST_CASE("pade reconstruction round trips") {
    RationalFunction f;
    f.num.c = {Rat(0), Rat(1)};
    f.den.c = {Rat(1), Rat(2), Rat(1)};
    QSeries s = expand_rational(f, 0, 12);
    auto rec = pade_reconstruct(s, 3);
    REQUIRE(rec.has_value());
    CHECK(*rec == f);
    QSeries back = expand_rational(*rec, 0, 12);
    CHECK(back == s);

    // truncated MacMahon is not rational at small degrees
    QSeries m = macmahon(14);
    auto no = pade_reconstruct(m, 3);
    CHECK_FALSE(no.has_value());

    // constants come back as constants
    QSeries c = QSeries::constant('q', make_rat(5, 3), 9);
    auto rc = pade_reconstruct(c, 2);
    REQUIRE(rc.has_value());
    CHECK(rc->num.c == std::vector<Rat>{make_rat(5, 3)});

    // insufficient terms is an error, not a silent failure
    QSeries shorty = QSeries::constant('q', Rat(1), 2);
    CHECK_THROWS(pade_reconstruct(shorty, 3));
}

TEST_CASE("gw/dt variable change: q/(1+q)^2 vs 1/(2 sin(u/2))^2") {
    RationalFunction zpt;
    zpt.num.c = {Rat(0), Rat(1)};
    zpt.den.c = {Rat(1), Rat(2), Rat(1)};

    // Expand 1/(2 sin(u/2))^2 independently: sin(u/2) = sum (-1)^k (u/2)^{2k+1}/(2k+1)!
    long order = 10;
    GSeries sin_half = GSeries::zero('u', order + 2);
    Rat fact(1);
    Rat pow_half(1);
    for (long k = 0; 2 * k + 1 <= order + 2; ++k) {
        // coefficient of u^{2k+1}: (-1)^k / (2^{2k+1} (2k+1)!)
        Rat num((k % 2 == 0) ? 1 : -1);
        Rat denom = Rat(1);
        for (long j = 1; j <= 2 * k + 1; ++j) denom *= Rat(j);
        Rat two_pow(1);
        for (long j = 0; j < 2 * k + 1; ++j) two_pow *= 2;
        sin_half.set(2 * k + 1, GaussRat(num / (denom * two_pow)));
    }
    GSeries zgw = (sin_half * GaussRat(Rat(2))).pow(-2);
    CHECK(zgw.coeff(-2) == GaussRat(Rat(1)));
    CHECK(zgw.coeff(0) == GaussRat(make_rat(1, 12)));
    CHECK(zgw.coeff(2) == GaussRat(make_rat(1, 240)));

    GwDtReport rep = gw_dt_compare(zpt, zgw, 0, 0, order);
    CHECK(rep.equal);

    // perturbing a single coefficient is flagged with the right order
    GSeries bad = zgw;
    bad.set(4, bad.coeff(4) + GaussRat(make_rat(1, 999)));
    GwDtReport rep2 = gw_dt_compare(zpt, bad, 0, 0, order);
    CHECK_FALSE(rep2.equal);
    CHECK(rep2.first_mismatch == 4);

    // equality at order N implies equality at all smaller orders
    for (long n = 2; n <= order; n += 2) CHECK(gw_dt_compare(zpt, zgw, 0, 0, n).equal);
}

TEST_CASE("gw/dt trivial comparison") {
    RationalFunction one;
    one.num.c = {Rat(1)};
    one.den.c = {Rat(1)};
    GSeries zgw = GSeries::constant('u', GaussRat(Rat(1)), 8);
    CHECK(gw_dt_compare(one, zgw, 0, 0, 8).equal);
}
