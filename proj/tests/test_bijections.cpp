#include <set>

#include "doctest.h"
#include "fusscat/bijections.hpp"
#include "fusscat/counting.hpp"
#include "fusscat/errors.hpp"
#include "support.hpp"

using namespace fusscat;
using support::A;
using support::T;

namespace {

LatticePath P(int d, const char* s) { return LatticePath::from_letters(d, s); }

std::string key(const MarkedTree& m) { return encode(m.tree) + "@" + format_addr(m.v); }

std::vector<MarkedTree> marked(int d, int n) {
  std::vector<MarkedTree> out;
  for (const auto& t : support::trees(d, n)) {
    for (const auto& v : preorder(t)) out.push_back({t, v});
  }
  return out;
}

std::vector<SiblingSeq> sequences(int d, int l) {
  std::vector<SiblingSeq> out{SiblingSeq{}};
  for (int i = 0; i < l; ++i) {
    std::vector<SiblingSeq> next;
    for (const auto& s : out) {
      for (int x = 0; x < d; ++x) {
        auto t = s;
        t.entries.push_back(x);
        next.push_back(t);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("phi small cases") {
  CHECK(phi(T("d=2;1,0,0")).letters() == "UDD");
  CHECK(phi(T("d=1;1,1,0")).letters() == "UUDD");
  CHECK(phi(T("d=1;2,0,0")).letters() == "UDUD");
  CHECK(phi(TupletTree(3)).empty());
}

TEST_CASE("phi and phibar of the d=3, six-tuplet example") {
  const auto up = P(3, "UDDDUUDDDUDDDDDDUDUDDDDD");
  const auto down = P(3, "DDDUDDDDUDDDUDDUDDDDDUDU");
  const auto t = phi_inv(up);
  CHECK(t.tuplet_count() == 6);
  CHECK(phibar(t) == down);
  CHECK(phibar_inv(down) == t);
}

TEST_CASE("phibar small cases") {
  CHECK(phibar(T("d=2;1,0,0")).letters() == "DDU");
  CHECK(phibar(T("d=1;1,1,0")).letters() == "DDUU");
  for (const auto& t : support::trees(3, 3)) CHECK(phibar(t) == reversed(phi(mirror(t))));
}

TEST_CASE("psi small cases") {
  CHECK(psi(T("d=2;1,0,0")).letters() == "UDD");
  CHECK(psi(T("d=1;2,0,0")).letters() == "UUDD");
  CHECK(psi(T("d=1;1,1,0")).letters() == "UDUD");
}

TEST_CASE("round trips and images") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 0; n <= 4; ++n) {
      std::set<std::string> fc, rev, a, b, c;
      for (const auto& p : gen_fc_paths(d, n)) fc.insert(p.letters());
      for (const auto& p : gen_reverse_paths(d, n)) rev.insert(p.letters());
      for (const auto& t : support::trees(d, n)) {
        const auto x = phi(t), y = phibar(t), z = psi(t);
        CHECK(x.size() == static_cast<std::size_t>((d + 1) * n));
        CHECK(z.up_count() == n);
        CHECK(z.down_count() == d * n);
        CHECK(phi_inv(x) == t);
        CHECK(phibar_inv(y) == t);
        CHECK(psi_inv(z) == t);
        a.insert(x.letters());
        b.insert(y.letters());
        c.insert(z.letters());
      }
      CHECK(a == fc);
      CHECK(b == rev);
      CHECK(c == fc);
    }
  }
}

TEST_CASE("inverse maps reject paths outside their domain") {
  CHECK_THROWS_AS(phi_inv(P(2, "DDU")), DomainError);
  CHECK_THROWS_AS(phi_inv(P(2, "UD")), DomainError);
  CHECK_THROWS_AS(psi_inv(P(2, "UDDD")), DomainError);
  CHECK_THROWS_AS(phibar_inv(P(2, "UDD")), DomainError);
}

TEST_CASE("rho") {
  CHECK(rho(P(2, "UDD"), 1).letters() == "DDU");
  const auto s = P(3, "UDDUDDDD");
  CHECK(rho(s, static_cast<long long>(s.size())) == s);
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) CHECK(rho(rho(s, a), b) == rho(s, a + b));
  }
  CHECK_THROWS_AS(rho(LatticePath(2), 1), DomainError);
}

TEST_CASE("main map at the root with l = 0") {
  for (const auto& t : support::trees(3, 2)) {
    const int root_out = t.root().tuplets.size();
    for (int k = 0; k <= root_out; ++k) {
      const auto img = phi_main({t, VertexAddr{}}, k, 0);
      CHECK(img.p.length() == 0);
      CHECK(format_seq(img.p) == "()");
      auto full = psi(t);
      full.push(Step::Down);
      CHECK(phi_main_path({t, VertexAddr{}}, k, 0) == full);
    }
    const auto img = phi_main({t, VertexAddr{}}, 0, 0);
    CHECK(phi_main_inv(img, 3, 2, 0, 0) == MarkedTree{t, VertexAddr{}});
  }
}

TEST_CASE("main map for d=3, n=3, k=1, l=2 hits every pair of P x L") {
  std::set<std::string> images;
  int domain = 0;
  for (const auto& m : marked(3, 3)) {
    const auto s = stats(m.tree, m.v);
    if (s.outdegree < 1 || s.level < 2) continue;
    ++domain;
    const auto img = phi_main(m, 1, 2);
    images.insert(format_seq(img.p) + encode(img.path_hat));
  }
  std::set<std::string> target;
  for (const auto& p : sequences(3, 2)) {
    for (const auto& h : gen_free_paths(3, 3, 1, 2)) target.insert(format_seq(p) + encode(h));
  }
  CHECK(domain == 9);
  CHECK(images == target);
}

TEST_CASE("main map structure and round trip") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const auto all = marked(d, n);
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + l <= n; ++l) {
          std::set<std::string> images;
          long long domain = 0;
          for (const auto& m : all) {
            const auto s = stats(m.tree, m.v);
            if (s.outdegree < k || s.level < l) {
              CHECK_THROWS_AS(phi_main(m, k, l), DomainError);
              continue;
            }
            ++domain;
            const auto full = phi_main_path(m, k, l);
            const auto& st = full.steps();
            REQUIRE(full.size() == static_cast<std::size_t>((d + 1) * n + l + 1));
            CHECK(full.final_height() == -(l + 1));
            for (int i = 0; i < k; ++i) CHECK(st[i] == Step::Up);
            for (int i = 0; i < l; ++i) CHECK(st[st.size() - 1 - i] == Step::Up);
            CHECK(st[st.size() - 1 - l] == Step::Down);

            const auto img = phi_main(m, k, l);
            CHECK(img.path_hat.up_count() == n - k - l);
            CHECK(img.path_hat.down_count() == d * n + l);
            for (int e : img.p.entries) CHECK(e < d);
            images.insert(format_seq(img.p) + encode(img.path_hat));
            CHECK(phi_main_inv(img, d, n, k, l) == m);
          }
          CHECK(Count(domain) == count_atleast(d, n, k, l));
          CHECK(static_cast<long long>(images.size()) == domain);
        }
      }
    }
  }
}

TEST_CASE("inverse main map over all of P x L for d=2, n=3, k=0, l=1") {
  std::set<std::string> seen;
  for (const auto& p : sequences(2, 1)) {
    for (const auto& h : gen_free_paths(2, 3, 0, 1)) {
      const auto m = phi_main_inv(p, h, 2, 3, 0, 1);
      CHECK(stats(m.tree, m.v).level >= 1);
      CHECK(phi_main(m, 0, 1) == PhiImage{p, h});
      seen.insert(key(m));
    }
  }
  CHECK(seen.size() == 72);
  CHECK(Count(72) == count_atleast(2, 3, 0, 1));
}

TEST_CASE("inverse main map with empty p and l = 0") {
  const auto h = LatticePath::from_letters(2, "UUDDDD");
  const auto m = phi_main_inv(SiblingSeq{}, h, 2, 2, 0, 0);
  CHECK(m.v.is_root());
  CHECK(encode(m.tree) == "d=2;2,0,0,0,0");
}

TEST_CASE("main map argument checks") {
  const auto t = T("d=2;1,0,0");
  CHECK_THROWS_AS(phi_main({t, A("0.0")}, 1, 0), DomainError);
  CHECK_THROWS_AS(phi_main({t, VertexAddr{}}, 0, 1), DomainError);
  CHECK_THROWS_AS(phi_main({t, A("3.0")}, 0, 0), AddressError);
  const auto h = LatticePath::from_letters(2, "DDDDD", 0);
  CHECK_THROWS_AS(phi_main_inv(parse_seq("(2)"), h, 2, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(phi_main_inv(parse_seq("(0,0)"), h, 2, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(phi_main_inv(parse_seq("(0)"), LatticePath::from_letters(2, "DDDD"), 2, 2, 0, 1),
                  DomainError);
  CHECK_THROWS_AS(phi_main_inv(parse_seq("(0)"), LatticePath::from_letters(2, "DDDD", 2), 2, 2, 1, 1),
                  DomainError);
}

TEST_CASE("gamma") {
  for (const auto& m : marked(2, 3)) CHECK(gamma(m, 0, 0) == m);

  std::set<std::string> image, target;
  for (const auto& m : marked(2, 3)) {
    const auto s = stats(m.tree, m.v);
    if (s.level >= 1 && s.child_count >= 2) target.insert(key(m));
    if (s.level < 1 || s.global_elders < 2) continue;
    const auto g = gamma(m, 2, 0);
    CHECK(g.tree.tuplet_count() == 3);
    CHECK(g.v.level() == m.v.level());
    CHECK(stats(g.tree, g.v).child_count == s.child_count + 2);
    CHECK(gamma_inv(g, 2, 0) == m);
    CHECK(image.insert(key(g)).second);
  }
  CHECK(image == target);

  const auto t = T("d=2;3,0,0,0,0,0,0");
  const auto g = gamma({t, A("1.0")}, 2, 2);
  CHECK(encode(g.tree) == "d=2;1,2,0,0,0,0,0");
  CHECK(g.v == A("0.0"));
  CHECK(gamma_inv(g, 2, 2) == MarkedTree{t, A("1.0")});
  CHECK_THROWS_AS(gamma({t, A("0.0")}, 2, 0), DomainError);
  CHECK_THROWS_AS(gamma({t, A("1.0")}, 1, 0), DomainError);
  CHECK_THROWS_AS(gamma({t, VertexAddr{}}, 2, 0), DomainError);
}

TEST_CASE("exchange with a younger sibling") {
  for (const auto& m : marked(2, 2)) CHECK(exchange_to_youngest_sibling(m, 0) == m);

  std::set<std::string> image, target;
  for (const auto& m : marked(2, 2)) {
    const auto s = stats(m.tree, m.v);
    if (s.level >= 1 && s.global_elders >= 2) target.insert(key(m));
    if (s.level < 1 || s.global_elders < 1 || s.global_youngers < 1) continue;
    const auto x = exchange_to_youngest_sibling(m, 1);
    const auto sx = stats(x.tree, x.v);
    CHECK(sx.global_elders == s.global_elders + 1);
    CHECK(descendant_subtree(x.tree, x.v) == descendant_subtree(m.tree, m.v));
    CHECK(exchange_to_elder_sibling(x, 1) == m);
    CHECK(exchange_subtrees(x.tree, m.v, x.v) == m.tree);
    CHECK(image.insert(key(x)).second);
  }
  CHECK(image == target);

  const auto t = T("d=2;1,0,0");
  CHECK_THROWS_AS(exchange_to_youngest_sibling({t, A("0.1")}, 1), DomainError);
  CHECK_THROWS_AS(exchange_to_elder_sibling({t, A("0.0")}, 1), DomainError);
}
