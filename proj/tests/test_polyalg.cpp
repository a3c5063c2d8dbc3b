#include "doctest.h"
#include "fixtures.hpp"
#include "gci/errors.hpp"
#include "gci/poly_parse.hpp"
#include "random_gen.hpp"

using namespace gci;

namespace {

MultiPoly laurent(const std::string& s, const AmbientPtr& a, std::vector<int> deg) {
    ParseOptions o;
    o.laurent = {false, true};
    return parse_poly(s, a, deg, o);
}

std::vector<Coefficient> point(std::initializer_list<long> xs) {
    std::vector<Coefficient> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("add") {
    auto a = fixtures::cy_ambient();
    MultiPoly y0 = parse_poly("y0", a, {1, 0});
    MultiPoly s = y0 + (-y0);
    CHECK(s.is_zero());
    CHECK(s.degrees() == std::vector<int>{1, 0});
    CHECK((fixtures::cy_P(a, 1) + fixtures::cy_P(a, 2)) == parse_poly("y0^2+y1^2+y3^2+y4^2", a, {2, 0}));
    MultiPoly z = parse_poly("z0^3", a, {0, 3}) + parse_poly("z0^2*z1", a, {0, 3});
    CHECK(z.size() == 2);
    CHECK_THROWS_AS(y0 + parse_poly("y0^2", a, {2, 0}), ValidationError);
}

TEST_CASE("mul, including Laurent exponents") {
    auto toy = fixtures::toy_ambient();
    MultiPoly q = laurent("z0^-2*z1^-2", toy, {0, -4});
    MultiPoly prod = fixtures::toy_F(toy) * q;
    CHECK(prod == laurent("y0*z1^-2 + y1*z0^-2", toy, {1, -2}));
    CHECK((fixtures::toy_F(toy) * parse_poly("1", toy, {0, 0})) == fixtures::toy_F(toy));

    auto a = fixtures::cy_ambient();
    MultiPoly P3 = fixtures::cy_P(a, 3);
    MultiPoly lhs = (P3 * parse_poly("z1^3", a, {0, 3})) * (parse_poly("y0", a, {1, 0}) * laurent("z0^-3*z1^-1", a, {0, -4}));
    MultiPoly rhs = (P3 * parse_poly("y0", a, {1, 0})) * laurent("z0^-3*z1^2", a, {0, -1});
    CHECK(lhs == rhs);
    CHECK(lhs.degrees() == std::vector<int>{3, -1});
}

TEST_CASE("coeff_of") {
    auto a = fixtures::cy_ambient();
    MultiPoly F = fixtures::cy_F(a);
    CHECK(F.coeff_of(1, 3, 0) == fixtures::cy_P(a, 0));
    CHECK(F.coeff_of(1, 0, 3) == fixtures::cy_P(a, 3));
    MultiPoly Fq = F * fixtures::cy_q(a).representative();
    CHECK(Fq.coeff_of(1, -3, 2) == fixtures::cy_P(a, 3) * parse_poly("y0", a, {1, 0}));
    MultiPoly zero(a, {2, 3});
    CHECK(zero.coeff_of(1, 1, 2).is_zero());
    CHECK(F.coeff_of(1, 2, 2).is_zero());  // wrong total degree
}

TEST_CASE("evaluate") {
    auto a = fixtures::cy_ambient();
    MultiPoly F = fixtures::cy_F(a);
    // At z = (1, 0) only P0 z0^3 survives: P0(1,0,0,0,0) = 1.
    CHECK(F.evaluate(point({1, 0, 0, 0, 0, 1, 0})) == Coefficient(1));
    // At z = (1, 1): P0 + P1 + P2 + P3 at e_0 = 1 + 1 + 0 + 1.
    CHECK(F.evaluate(point({1, 0, 0, 0, 0, 1, 1})) == Coefficient(3));
    CHECK(parse_poly("1", a, {0, 0}).evaluate(point({5, 4, 3, 2, 1, 0, 9})) == Coefficient(1));

    auto toy = fixtures::toy_ambient();
    Field f7 = Field::mod(7);
    ParseOptions o;
    o.field = f7;
    MultiPoly p = parse_poly("y0*z1", toy, {1, 1}, o);
    std::vector<Coefficient> pt{Coefficient::from_integer(3, f7), Coefficient::zero(f7), Coefficient::zero(f7),
                                Coefficient::from_integer(2, f7)};
    CHECK(p.evaluate(pt).residue() == 6);

    MultiPoly q = laurent("z0^-1*z1^-1", toy, {0, -2});
    CHECK_THROWS_AS(q.evaluate(point({1, 1, 0, 1})), PreconditionError);
    CHECK(q.evaluate(point({1, 1, 2, 3})) == Coefficient(mpq_class(1, 6)));
}

TEST_CASE("partial_derivative") {
    auto a = fixtures::cy_ambient();
    CHECK(parse_poly("y0^2", a, {2, 0}).partial_derivative(0) == parse_poly("2*y0", a, {1, 0}));
    MultiPoly dF = fixtures::cy_F(a).partial_derivative(*a->find_var("z0"));
    MultiPoly expect = fixtures::cy_P(a, 0) * parse_poly("3*z0^2", a, {0, 2}) +
                       fixtures::cy_P(a, 1) * parse_poly("2*z0*z1", a, {0, 2}) +
                       fixtures::cy_P(a, 2) * parse_poly("z1^2", a, {0, 2});
    CHECK(dF == expect);
    MultiPoly dc = parse_poly("5", a, {0, 0}).partial_derivative(0);
    CHECK(dc.is_zero());
    auto toy = fixtures::toy_ambient();
    CHECK_THROWS_AS(laurent("z0^-1*z1^-1", toy, {0, -2}).partial_derivative(2), ValidationError);
}

TEST_CASE("parse and print") {
    auto a = fixtures::cy_ambient();
    MultiPoly P0 = parse_poly("y0^2+y1^2+y2^2+y3^2+y4^2", a, {2, 0});
    CHECK(P0.size() == 5);
    CHECK(P0.to_string() == "y0^2 + y1^2 + y2^2 + y3^2 + y4^2");
    CHECK(parse_poly("0", a, {3, 1}).is_zero());
    MultiPoly z = parse_poly("y0*z0 - y0*z0", a, {1, 1});
    CHECK(z.is_zero());
    CHECK(z.degrees() == std::vector<int>{1, 1});
    CHECK(parse_poly(" - 3/2 * y0 + ( y1 - y2 ) * 2 ", a, {1, 0}).to_string() == "-3/2*y0 + 2*y1 - 2*y2");
    CHECK(parse_poly("6/4*y0", a, {1, 0}).to_string() == "3/2*y0");

    try {
        parse_poly("y0 + + y1", a, {1, 0});
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_poly("y0 + w", a, {1, 0}), ParseError);
    CHECK_THROWS_AS(parse_poly("y0 + y1^2", a, {1, 0}), ValidationError);  // inhomogeneous
    CHECK_THROWS_AS(parse_poly("y0*z0^-1", a, {1, -1}), ParseError);       // no Laurent permission
    CHECK_THROWS_AS(parse_poly("(y0", a, {1, 0}), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0*y0", a, {1, 0}), ParseError);
}

TEST_CASE("reduce_mod_p") {
    auto a = fixtures::cy_ambient();
    MultiPoly p = parse_poly("3/2*y0", a, {1, 0}).reduce_mod_p(5);
    CHECK(p.to_string() == "4*y0");
    MultiPoly F = fixtures::cy_F(a);
    MultiPoly F7 = F.reduce_mod_p(7);
    CHECK(F7.size() == F.size());
    for (const auto& [e, c] : F.terms()) {
        auto r = F7.coefficient(e).residue();
        CHECK((r == 1 || r == 6));
        CHECK(r == (c.rational() > 0 ? 1u : 6u));
    }
    CHECK_THROWS_AS(parse_poly("1/7*y0", a, {1, 0}).reduce_mod_p(7), PreconditionError);
    CHECK_THROWS_AS(parse_poly("y0", a, {1, 0}).reduce_mod_p(9), ValidationError);
}

TEST_CASE("ring axioms on seeded random triples") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 1000; ++trial) {
        auto amb = gen::ambient(rng);
        auto da = gen::degrees(rng, amb->num_factors());
        auto dc = gen::degrees(rng, amb->num_factors());
        MultiPoly a = gen::poly(rng, amb, da), b = gen::poly(rng, amb, da), c = gen::poly(rng, amb, dc);
        CHECK(((a + b) * c) == (a * c + b * c));
        MultiPoly d = gen::poly(rng, amb, gen::degrees(rng, amb->num_factors(), 1));
        CHECK(((a * c) * d) == (a * (c * d)));
        CHECK((a * c) == (c * a));
        auto prod = (a * c).degrees();
        for (std::size_t i = 0; i < prod.size(); ++i) CHECK(prod[i] == da[i] + dc[i]);
    }
}

TEST_CASE("parse(print(p)) == p") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto amb = gen::ambient(rng);
        auto deg = gen::degrees(rng, amb->num_factors(), 3);
        MultiPoly p = gen::poly(rng, amb, deg);
        CHECK(parse_poly(p.to_string(), amb, deg) == p);
        if (trial % 3 == 0) {
            MultiPoly r = p.reduce_mod_p(13);
            ParseOptions o;
            o.field = Field::mod(13);
            CHECK(parse_poly(r.to_string(), amb, deg, o) == r);
        }
    }
    auto toy = fixtures::toy_ambient();
    MultiPoly l = laurent("3*y0*z0^-3*z1 - 1/2*y1*z0^-1*z1^-1", toy, {1, -2});
    CHECK(laurent(l.to_string(), toy, {1, -2}) == l);
}

TEST_CASE("reduce_mod_p is a ring morphism") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto amb = gen::ambient(rng);
        MultiPoly a = gen::poly(rng, amb, gen::degrees(rng, amb->num_factors()));
        MultiPoly b = gen::poly(rng, amb, gen::degrees(rng, amb->num_factors()));
        for (std::uint32_t p : {7u, 11u, 13u}) CHECK((a * b).reduce_mod_p(p) == a.reduce_mod_p(p) * b.reduce_mod_p(p));
    }
}
