#include <algorithm>
#include <set>

#include "doctest.h"
#include "fusscat/errors.hpp"
#include "fusscat/path.hpp"
#include "fusscat/tree.hpp"
#include "support.hpp"

using namespace fusscat;
using support::A;
using support::T;

TEST_CASE("validate accepts a single tuplet") {
  Vertex root;
  root.tuplets.push_back(Tuplet{{Vertex{}, Vertex{}}});
  CHECK(validate(2, root).empty());
}

TEST_CASE("validate flags a tuplet of the wrong arity") {
  Vertex root;
  root.tuplets.push_back(Tuplet{{Vertex{}, Vertex{}, Vertex{}}});
  const auto v = validate(2, root);
  REQUIRE(v.size() == 1);
  CHECK(v[0].at.is_root());
  CHECK(v[0].tuplet == 0);
  CHECK_THROWS_AS(TupletTree(2, root), StructuralError);
}

TEST_CASE("every 3-tuplet tree with 3 tuplets is valid") {
  const auto all = support::trees(3, 3);
  CHECK(all.size() == 22);
  for (const auto& t : all) {
    CHECK(validate(3, t.root()).empty());
    CHECK(t.tuplet_count() == 3);
    CHECK(t.vertex_count() == 10);
  }
}

TEST_CASE("preorder small cases") {
  const auto p = preorder(T("d=2;1,0,0"));
  REQUIRE(p.size() == 3);
  CHECK(p[0].is_root());
  CHECK(p[1] == A("0.0"));
  CHECK(p[2] == A("0.1"));

  const auto chain = preorder(T("d=1;1,1,0"));
  REQUIRE(chain.size() == 3);
  CHECK(chain[1] == A("0.0"));
  CHECK(chain[2] == A("0.0/0.0"));
}

TEST_CASE("preorder visits every vertex once, ancestors first") {
  for (const auto& t : support::trees(3, 2)) {
    const auto p = preorder(t);
    CHECK(p.size() == 7);
    CHECK(std::set<VertexAddr>(p.begin(), p.end()).size() == 7);
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(p[i].is_ancestor_of(p[j]));
    }
  }
}

TEST_CASE("stats of the root") {
  for (const auto& t : support::trees(2, 3)) {
    const auto s = stats(t, VertexAddr{});
    CHECK(s.level == 0);
    CHECK(s.tuplet_elders == 0);
    CHECK(s.global_elders == 0);
    CHECK(s.global_youngers == 0);
  }
}

TEST_CASE("stats count siblings across tuplets") {
  const auto t = T("d=2;2,0,0,0,0");
  const auto s = stats(t, A("1.1"));
  CHECK(s.global_elders == 3);
  CHECK(s.global_youngers == 0);
  CHECK(s.tuplet_elders == 1);
  CHECK(s.level == 1);
  const auto u = stats(t, A("0.1"));
  CHECK(u.global_elders == 1);
  CHECK(u.global_youngers == 2);
  CHECK_THROWS_AS(stats(t, A("2.0")), AddressError);
  CHECK_THROWS_AS(stats(t, A("0.2")), AddressError);
}

TEST_CASE("outdegree 1 at level 2 occurs 9 times among 3-tuplet trees with 3 tuplets") {
  int hits = 0;
  for (const auto& t : support::trees(3, 3)) {
    for (const auto& v : preorder(t)) {
      const auto s = stats(t, v);
      if (s.outdegree == 1 && s.level == 2) ++hits;
    }
  }
  CHECK(hits == 9);
}

TEST_CASE("vertex statistics invariants") {
  for (const auto& t : support::trees(2, 4)) {
    int outdeg_sum = 0;
    for (const auto& v : preorder(t)) {
      const auto s = stats(t, v);
      outdeg_sum += s.outdegree;
      CHECK(s.child_count == 2 * s.outdegree);
      CHECK(s.level == v.level());
      if (!v.is_root()) {
        const auto parent = stats(t, v.parent());
        CHECK(s.global_elders + s.global_youngers + 1 == parent.child_count);
        CHECK(s.tuplet_elders == v.steps.back().position);
        CHECK(s.global_elders % 2 == s.tuplet_elders);
      }
    }
    CHECK(outdeg_sum == t.tuplet_count());
  }
}

TEST_CASE("exchange_subtrees") {
  const auto t = T("d=1;2,1,0,0");
  CHECK(exchange_subtrees(t, A("0.0"), A("0.0")) == t);
  const auto swapped = exchange_subtrees(t, A("0.0"), A("1.0"));
  CHECK(encode(swapped) == "d=1;2,0,1,0");
  CHECK(exchange_subtrees(swapped, A("0.0"), A("1.0")) == t);
  CHECK_THROWS_AS(exchange_subtrees(t, VertexAddr{}, A("0.0")), StructuralError);
  CHECK_THROWS_AS(exchange_subtrees(t, A("0.0"), A("0.0/0.0")), StructuralError);
}

TEST_CASE("exchange_subtrees is an involution and keeps subtree shapes") {
  for (const auto& t : support::trees(2, 3)) {
    const auto order = preorder(t);
    for (const auto& v : order) {
      for (const auto& w : order) {
        if (v != w && (v.is_ancestor_of(w) || w.is_ancestor_of(v))) continue;
        const auto x = exchange_subtrees(t, v, w);
        CHECK(exchange_subtrees(x, v, w) == t);
        CHECK(x.tuplet_count() == t.tuplet_count());
        CHECK(descendant_subtree(x, w) == descendant_subtree(t, v));
      }
    }
  }
}

TEST_CASE("descendant subtree and mirror") {
  const auto t = T("d=2;1,1,0,0,0");
  CHECK(encode(descendant_subtree(t, A("0.0"))) == "d=2;1,0,0");
  CHECK(encode(descendant_subtree(t, A("0.1"))) == "d=2;0");
  CHECK(encode(mirror(t)) == "d=2;1,0,1,0,0");
  for (const auto& u : support::trees(3, 3)) CHECK(mirror(mirror(u)) == u);
}

TEST_CASE("canonical text round trips") {
  for (const auto& t : support::trees(3, 3)) CHECK(parse_tree(encode(t)) == t);
  CHECK(encode(TupletTree(4)) == "d=4;0");
  CHECK_THROWS_AS(parse_tree("d=2;1,0"), ParseError);
  CHECK_THROWS_AS(parse_tree("d=2;0,1,0"), ParseError);
  CHECK_THROWS_AS(parse_tree("2;1,0,0"), ParseError);
  CHECK_THROWS_AS(parse_tree("d=2;1,x,0"), ParseError);
  CHECK(format_addr(VertexAddr{}) == "root");
  CHECK(format_addr(A("1.0/0.2")) == "1.0/0.2");
  CHECK_THROWS_AS(parse_addr("1-0"), ParseError);
}

TEST_CASE("lattice paths") {
  const auto p = LatticePath::from_letters(2, "UDD");
  CHECK(p.is_fuss_catalan());
  CHECK_FALSE(p.is_reverse_fuss_catalan());
  CHECK(p.heights() == std::vector<int>{0, 2, 1, 0});
  CHECK(parse_path(encode(p)) == p);
  CHECK(encode(p) == "d=2;start=0;UDD");
  CHECK(LatticePath::from_letters(2, "DDU").is_reverse_fuss_catalan());
  const auto q = parse_path("d=3;start=3;DDDD");
  CHECK(q.start_height() == 3);
  CHECK(q.final_height() == -1);
  CHECK_THROWS_AS(LatticePath::from_letters(2, "UXD"), ParseError);
  CHECK(format_seq(parse_seq("(0,2,1)")) == "(0,2,1)");
  CHECK(parse_seq("()").length() == 0);
  CHECK_THROWS_AS(parse_seq("0,1"), ParseError);
}
