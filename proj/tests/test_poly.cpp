#include "support.hpp"

#include "opgraph/operads.hpp"

using namespace testing;

namespace {

WordComb random_comb(const std::vector<Word>& pool) {
    WordComb f;
    std::uniform_int_distribution<int> coef(-5, 5), count(0, 6);
    int n = count(rng());
    for (int i = 0; i < n; ++i) f.add(pick(pool), coef(rng()));
    return f;
}

}  // namespace

TEST_CASE("combination arithmetic") {
    Word x{0}, y{0, 1};
    WordComb f(x, 2);
    f.add(x, -2);
    CHECK(f.empty());
    WordComb g = WordComb(x) + WordComb(y);
    g.scale(3);
    CHECK(g.coeff(x) == 3);
    CHECK(g.coeff(y) == 3);
    CHECK(g.render() == "3*0 + 3*0,1");
    CHECK((-g).render() == "-3*0 - 3*0,1");
    CHECK(WordComb().render() == "0");
}

TEST_CASE("combination universes") {
    TreeComb f(Tree::leaf(alpha("a:2")));
    CHECK_THROWS_AS(f.add(Tree::leaf(alpha("c:3")), 1), UniverseMismatch);
    f.add(Tree::leaf(alpha("a:2")), 1);
    CHECK(f.size() == 1);
}

TEST_CASE("combination algebra on random inputs") {
    std::vector<Word> pool{{0}, {0, 0}, {0, 1}, {0, 1, 0}, {0, 0, 1}};
    for (int k = 0; k < 100; ++k) {
        auto f = random_comb(pool), g = random_comb(pool), h = random_comb(pool);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f - f == WordComb());
        CHECK(scalar_product(f + g, h) == scalar_product(f, h) + scalar_product(g, h));
        CHECK(scalar_product(Int(3) * f, h) == 3 * scalar_product(f, h));
        auto fg = hadamard(f, g);
        for (const auto& w : pool) CHECK(fg.coeff(w) == f.coeff(w) * g.coeff(w));
        for (const auto& w : fg.support()) CHECK((f.contains(w) && g.contains(w)));
    }
}

TEST_CASE("hadamard, scalar product, characteristic") {
    Word x{0}, y{0, 1};
    WordComb f(x);
    f.add(y, 2);
    auto h = hadamard(f, WordComb(x, 3));
    CHECK(h == WordComb(x, 3));
    CHECK(hadamard(f, characteristic(f.support())) == f);
    CHECK(scalar_product(f, WordComb(y)) == f.coeff(y));
    CHECK(scalar_product(f, WordComb()) == 0);
}

TEST_CASE("trace") {
    auto a = alpha("a:2");
    auto chi = characteristic(trees_up_to(a, 3));
    auto p = trace(chi, [](const Tree& t) { return t.degree(); });
    CHECK(p.coeffs == std::vector<Int>{1, 1, 2, 5});
    CHECK(trace(TreeComb(), [](const Tree& t) { return t.degree(); }).coeffs.empty());
}

TEST_CASE("canonical term order") {
    auto a = alpha("a:2");
    TreeComb f;
    f.add(T(a, "a[*,a[*,*]]"), 1);
    f.add(T(a, "*"), 1);
    f.add(T(a, "a[*,*]"), 1);
    f.add(T(a, "a[a[*,*],*]"), 1);
    CHECK(f.render() == "1** + 1*a[*,*] + 1*a[*,a[*,*]] + 1*a[a[*,*],*]");
}

TEST_CASE("upoly") {
    UPoly p({1, 2, 3});
    CHECK(p.eval(2) == 17);
    CHECK(p.derivative().coeffs == std::vector<Int>{2, 6});
    CHECK((p * UPoly({1, 1})).coeffs == std::vector<Int>{1, 3, 5, 3});
    CHECK(p.to_string() == "1 + 2t + 3t^2");
    CHECK(p.csv(4) == "1,2,3,0,0");
    CHECK(UPoly({0, 0}).coeffs.empty());
}

TEST_CASE("factorial and multinomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({}) == 1);
    for (unsigned long a = 0; a <= 4; ++a)
        for (unsigned long b = 0; b <= 4; ++b)
            for (unsigned long c = 0; c <= 4; ++c)
                CHECK(multinomial({a, b, c}) == factorial(a + b + c) / (factorial(a) * factorial(b) * factorial(c)));
}
