#include <doctest.h>

#include "hypercat/term.hpp"
#include "support.hpp"

using namespace hypercat;
using namespace hypercat::testing;

namespace {

Signature term_signature() {
  return Signature::build({"A", "B"},
                          {{"f", {"A"}, {"A"}, "f"},
                           {"g", {"A", "A"}, {"B"}, "gd"},
                           {"gd", {"B"}, {"A", "A"}, "g"},
                           {"e", {"B"}, {}, "s"},
                           {"s", {}, {"B"}, "e"}},
                          true);
}

Morphism el(const std::string& text, const Signature& sig) { return elaborate(parse_term(text, sig), sig); }

}  // namespace

TEST_CASE("parsing") {
  const Signature sig = term_signature();

  SUBCASE("constants and typing") {
    const Term t = parse_term("(id[A] * swap[A,B]) ; (f * id[B,A])", sig);
    CHECK(t.dom() == Word{"A", "A", "B"});
    CHECK(t.cod() == Word{"A", "B", "A"});
    CHECK(t.kind() == Term::Kind::Seq);
    CHECK(parse_term("cap[A]", sig).cod() == Word{"A", "A"});
    CHECK(parse_term("cup[B]", sig).dom() == Word{"B", "B"});
    CHECK(parse_term("eta[A] ; eps[A]", sig).dom().empty());
    CHECK(parse_term("g ^", sig).dom() == Word{"B"});
    CHECK(parse_term("id[]", sig).dom().empty());
  }
  SUBCASE("precedence") {
    CHECK(parse_term("f * f ; g", sig) == parse_term("(f * f) ; g", sig));
    CHECK(parse_term("f * f ^", sig) == parse_term("f * (f ^)", sig));
    CHECK(parse_term("f ; f ; f", sig) == parse_term("(f ; f) ; f", sig));
    CHECK(parse_term("f * f * f", sig) == parse_term("(f * f) * f", sig));
  }
  SUBCASE("generator counting") {
    CHECK(parse_term("id[A] ; f ; id[A]", sig).generator_count() == 1);
    CHECK(parse_term("cap[A] ; (f * f) ; g", sig).generator_count() == 4);
  }
  SUBCASE("errors carry a position") {
    try {
      parse_term("f ; q", sig);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_term("mu[C]", sig), ParseError);
    CHECK_THROWS_AS(parse_term("swap[A]", sig), ParseError);
    CHECK_THROWS_AS(parse_term("(f ; f", sig), ParseError);
    CHECK_THROWS_AS(parse_term("f f", sig), ParseError);
    CHECK_THROWS_AS(parse_term("", sig), ParseError);
  }
  SUBCASE("ill-typed composition") {
    try {
      parse_term("eta[A] ; e", sig);
      FAIL("expected a type error");
    } catch (const TypeError& e) {
      const std::string what = e.what();
      CHECK(what.find("(A)") != std::string::npos);
      CHECK(what.find("(B)") != std::string::npos);
      CHECK(what.find("position 7") != std::string::npos);
    }
    CHECK_THROWS_AS(Term::seq(Term::mu("A"), Term::mu("A")), TypeError);
  }
  SUBCASE("dagger of boxes needs a dagger signature") {
    const Signature plain = Signature::build({"A"}, {{"f", {"A"}, {"A"}, {}}}, false);
    CHECK_THROWS_AS(parse_term("f ^", plain), TypeError);
    CHECK(parse_term("mu[A] ^", plain).cod() == Word{"A", "A"});
  }
}

TEST_CASE("printing round-trips") {
  const Signature sig = term_signature();
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Term t = random_term(sig, k % 2 ? Word{"A"} : Word{"A", "B"}, 6, 4, rng);
    const std::string text = to_string(t);
    CHECK_MESSAGE(parse_term(text, sig) == t, text);
  }
  CHECK(to_string(parse_term("(f ; f) * f", sig)) == "(f ; f) * f");
  CHECK(to_string(parse_term("(f * f) ; g", sig)) == "f * f ; g");
  CHECK(to_string(parse_term("f * (f ; f)", sig)) == "f * (f ; f)");
}

TEST_CASE("elaboration") {
  const Signature sig = term_signature();

  SUBCASE("snake equations") {
    CHECK(el("(cap[A] * id[A]) ; (id[A] * cup[A])", sig) == identity_diagram({"A"}));
    CHECK(el("(id[B] * cap[B]) ; (cup[B] * id[B])", sig) == identity_diagram({"B"}));
  }
  SUBCASE("spider fusion") {
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t n = 0; n < 4; ++n)
        CHECK(elaborate(spider_term(m, n, "A"), sig) == spider_diagram(m, n, "A"));
    CHECK(el("delta[A] ; mu[A]", sig) == identity_diagram({"A"}));
    CHECK(el("(delta[A] * id[A]) ; (id[A] * mu[A])", sig) == el("mu[A] ; delta[A]", sig));
  }
  SUBCASE("commutative Frobenius axioms") {
    const std::vector<std::pair<std::string, std::string>> axioms = {
        {"(mu[A] * id[A]) ; mu[A]", "(id[A] * mu[A]) ; mu[A]"},
        {"(eta[A] * id[A]) ; mu[A]", "id[A]"},
        {"swap[A,A] ; mu[A]", "mu[A]"},
        {"delta[A] ; (delta[A] * id[A])", "delta[A] ; (id[A] * delta[A])"},
        {"delta[A] ; (eps[A] * id[A])", "id[A]"},
        {"delta[A] ; swap[A,A]", "delta[A]"},
        {"(id[A] * delta[A]) ; (mu[A] * id[A])", "mu[A] ; delta[A]"},
        {"swap[A,B] ; swap[B,A]", "id[A,B]"},
        {"(f * id[B]) ; swap[A,B]", "swap[A,B] ; (id[B] * f)"},
    };
    for (const auto& [l, r] : axioms) CHECK_MESSAGE(el(l, sig) == el(r, sig), l);
  }
  SUBCASE("boxes are not fused") {
    CHECK_FALSE(el("f ; f", sig) == el("f", sig));
    CHECK(el("f ^", sig) == el("f", sig));
    CHECK(el("g ^", sig) == el("gd", sig));
    CHECK_FALSE(el("g", sig) == el("swap[A,A] ; g", sig));
  }
  SUBCASE("dagger of terms agrees with dagger of diagrams") {
    Rng rng(3);
    for (int k = 0; k < 80; ++k) {
      const Term t = random_term(sig, {"A"}, 5, 3, rng);
      CHECK(elaborate(Term::dag(t), sig) == dagger(elaborate(t, sig), sig));
    }
  }
  SUBCASE("functoriality") {
    Rng rng(11);
    for (int k = 0; k < 80; ++k) {
      const Term a = random_term(sig, {"A"}, 4, 3, rng);
      const Term b = random_term(sig, a.cod(), 4, 3, rng);
      const Term c = random_term(sig, {"B"}, 3, 3, rng);
      CHECK(elaborate(Term::seq(a, b), sig) == compose(elaborate(a, sig), elaborate(b, sig)));
      CHECK(elaborate(Term::par(a, c), sig) == tensor(elaborate(a, sig), elaborate(c, sig)));
    }
  }
}

TEST_CASE("expansion") {
  const Signature sig = term_signature();
  CHECK(expand(identity_diagram({"A"}), sig) == Term::id({"A"}));
  CHECK(expand(spider_diagram(2, 1, "A"), sig) == Term::mu("A"));
  CHECK(expand(spider_diagram(1, 2, "B"), sig) == Term::delta("B"));
  CHECK(expand(spider_diagram(0, 1, "A"), sig) == Term::eta("A"));

  Rng rng(19);
  for (int k = 0; k < 150; ++k) {
    const Term t = random_term(sig, k % 3 ? Word{"A", "A"} : Word{}, 6, 4, rng);
    const Morphism f = elaborate(t, sig);
    const Term e = expand(f, sig);
    CHECK(e.dom() == f.dom());
    CHECK(e.cod() == f.cod());
    CHECK_MESSAGE(elaborate(e, sig) == f, to_string(t));
  }
  const auto corpus = enumerate_simple_closed(two_generator_signature(), 3, 3);
  for (const auto& f : corpus) {
    const Signature s = two_generator_signature();
    CHECK(elaborate(expand(Morphism(f), s), s) == Morphism(f));
  }
}
