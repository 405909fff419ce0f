#include "doctest.h"

#include "cogkit/catalog.hpp"
#include "cogkit/presentation.hpp"

using namespace cogkit;

namespace {

GroupPresentation pi1(const ComplexOfGroups& c) { return pi1_presentation(c, maximal_tree(*c.base)); }

}  // namespace

TEST_CASE("generator and relator counts") {
  const auto seg = fixtures::seg23();
  const auto p = pi1(*seg);
  // 2 + 3 + 1 vertex generators, 2 edge generators.
  CHECK(p.generators.size() == 8);
  // 4 + 9 + 1 table relators, 1 + 1 edge relators, 2 tree relators.
  CHECK(p.relators.size() == 18);
  CHECK(p.generators[vertex_generator(*seg, 1, 2)].element == 2);
  CHECK(p.generators[edge_generator(*seg, 1)].kind == Generator::Kind::Edge);
}

TEST_CASE("abelianizations") {
  // Z2 * Z3 -> Z6.
  CHECK(abelianization(pi1(*fixtures::seg23())) == std::vector<long long>{6});
  // The circle of trivial groups has pi1 = Z.
  CHECK(abelianization(pi1(trivial_complex(fixtures::circle()))) == std::vector<long long>{0});
  CHECK(abelianization(pi1(trivial_complex(fixtures::two_simplex()))).empty());
  // A star of groups has pi1 = G_gamma.
  CHECK(abelianization(pi1(*fixtures::star_s3())) == std::vector<long long>{2});
  // Simplification keeps the group.
  const auto p = pi1(*fixtures::seg23());
  CHECK(abelianization(simplify(p)) == std::vector<long long>{6});
}

TEST_CASE("words") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}).empty());
  CHECK(free_reduce({-3, 3, 3}) == Word{3});
  CHECK(gen_of(letter(4, true)) == 4);
  CHECK(letter(0) == 1);
  CHECK(letter(0, true) == -1);
}

TEST_CASE("simplification") {
  GroupPresentation p;
  for (int k = 0; k < 3; ++k) p.generators.push_back({Generator::Kind::Vertex, 0, Elem(k), "g" + std::to_string(k)});
  p.relators = {{1}, {2, 3, -3}, {2, 2}, {2, 2}, {}};
  const auto s = simplify(p);
  // g0 and then g1 die; g2 is free.
  CHECK(s.generators.size() == 1);
  CHECK(s.relators.empty());
  CHECK(abelianization(s) == std::vector<long long>{0});
  CHECK(abelianization(p) == std::vector<long long>{0});
}

TEST_CASE("induced hom to a group") {
  const auto seg = fixtures::seg23();
  const auto phi = fixtures::seg23_to_z6(seg);
  const auto h = induced_hom_to_group(phi, pi1(*seg));
  CHECK(h.report.ok());
  CHECK(h.surjective);

  auto bad = phi;
  bad.edge[0] = 1;  // not trivial on the tree
  CHECK_THROWS_AS(induced_hom_to_group(bad, pi1(*seg)), Error);
}

TEST_CASE("induced hom between presentations") {
  const auto c = fixtures::seg23();
  const auto collapse = fixtures::seg23_collapse(c);
  const auto src = pi1(*c);
  const auto tgt = pi1(*collapse.target);
  const auto h = induced_hom(collapse, src, tgt);
  CHECK(h.images.size() == src.generators.size());
  for (const auto& w : h.images)
    for (Letter l : w) CHECK(gen_of(l) < tgt.generators.size());
}

TEST_CASE("export formats") {
  const auto p = pi1(*fixtures::seg23());
  const auto plain = export_presentation(p, PresentationFormat::Plain);
  CHECK(plain.front() == '<');
  CHECK(plain.find('|') != std::string::npos);
  const auto cas = export_presentation(p, PresentationFormat::Cas);
  CHECK_FALSE(cas.empty());
  const auto text = export_presentation(p, PresentationFormat::Structured);
  CHECK(parse_structured_presentation(text) == p);

  CHECK(parse_presentation_format("plain") == PresentationFormat::Plain);
  CHECK_THROWS_AS(parse_presentation_format("gap4"), Error);
  CHECK_THROWS_AS(parse_structured_presentation("{"), Error);
}

TEST_CASE("the tree must span") {
  const auto c = trivial_complex(fixtures::circle());
  CHECK_THROWS_AS(pi1_presentation(c, {}), Error);
}
