#include "fusscat/verify.hpp"

#include <set>
#include <sstream>

#include "fusscat/bijections.hpp"
#include "fusscat/counting.hpp"
#include "fusscat/errors.hpp"
#include "fusscat/oracle.hpp"

namespace fusscat {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

class Recorder {
 public:
  explicit Recorder(CellReport& r) : r_(r) {}

  void check(bool ok, const std::string& witness) {
    ++r_.checks;
    if (!ok && r_.failures.size() < kMaxWitnesses) r_.failures.push_back(witness);
  }

  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& where) {
    bool ok = got == want;
    std::ostringstream w;
    if (!ok) w << where << ": got " << got << ", expected " << want;
    check(ok, w.str());
  }

 private:
  CellReport& r_;
};

std::string cell(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + '=' + std::to_string(v);
  }
  return out;
}

struct Marked {
  TupletTree tree;
  VertexAddr v;
  VertexStats st;
};

std::vector<Marked> all_marked(int d, int n, ResourceCap cap) {
  std::vector<Marked> out;
  for (const auto& t : gen_trees(d, n, cap)) {
    for (const auto& a : preorder(t)) out.push_back({t, a, stats(t, a)});
  }
  return out;
}

std::string key(const TupletTree& t, const VertexAddr& v) { return encode(t) + "@" + format_addr(v); }

void formulas(Recorder& rec, int d, int n, ResourceCap cap) {
  const VertexHistogram h = vertex_histogram(d, n, cap);
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      rec.equal(brute_count_atleast(h, k, l), count_atleast(d, n, k, l),
                "atleast " + cell({{"d", d}, {"n", n}, {"k", k}, {"l", l}}));
      rec.equal(brute_count_exact(h, k, l), count_exact(d, n, k, l),
                "exact " + cell({{"d", d}, {"n", n}, {"k", k}, {"l", l}}));
      if (d == 1) {
        rec.equal(count_atleast_d1(n, k, l), count_atleast(1, n, k, l),
                  "d1 " + cell({{"n", n}, {"k", k}, {"l", l}}));
      }
    }
  }
  for (int l = 1; l <= n; ++l) {
    for (int i = 0; i <= 2 * d; ++i) {
      for (int j = 0; j <= 2 * d; ++j) {
        for (int k = 0; k <= 2 * d; k += d) {
          const auto where = cell({{"d", d}, {"n", n}, {"i", i}, {"j", j}, {"k", k}, {"l", l}});
          const Count formula = count_refined(d, n, i, j, k, l);
          rec.equal(brute_count_refined(h, i, j, k, l), formula, "refined " + where);
          if (d == 1) rec.equal(count_refined_d1(n, i, j, k, l), formula, "refined_d1 " + where);
          if ((i + j + k) % d == 0 && i % d == 0 && j % d == 0) {
            rec.equal(count_aligned(d, n, i, j, k, l), formula, "lemma " + where);
          }
        }
      }
    }
  }
  rec.equal(h.total(), total_vertices(d, n), "histogram mass " + cell({{"d", d}, {"n", n}}));
}

void sieve(Recorder& rec, int d, int n) {
  Count sum = 0;
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      const auto where = cell({{"d", d}, {"n", n}, {"k", k}, {"l", l}});
      try {
        const Count exact = count_exact(d, n, k, l);
        const Count corners = count_atleast(d, n, k, l) - count_atleast(d, n, k + 1, l) -
                              count_atleast(d, n, k, l + 1) + count_atleast(d, n, k + 1, l + 1);
        rec.equal(exact, corners, "sieve " + where);
        sum += exact;
      } catch (const ArithmeticIdentityError& e) {
        rec.check(false, "sieve " + where + ": " + e.what());
      }
    }
  }
  rec.equal(sum, binomial(static_cast<long long>(d + 1) * n, n),
            "exact total " + cell({{"d", d}, {"n", n}}));
}

void telescoping(Recorder& rec, int d, int n, ResourceCap cap) {
  const VertexHistogram h = vertex_histogram(d, n, cap);
  for (int l = 1; l <= n; ++l) {
    for (int alpha = 0; alpha <= n; ++alpha) {
      const int k = alpha * d;
      const Count a = brute_count_refined(h, 0, 0, k, l);
      const Count bd = brute_count_refined(h, d, 0, k, l);
      for (int beta = 0; beta < d; ++beta) {
        const Count bb = brute_count_refined(h, beta, 0, k, l);
        rec.equal(Count(d) * (a - bb), Count(beta) * (a - bd),
                  "telescoping " + cell({{"d", d}, {"n", n}, {"alpha", alpha}, {"beta", beta}, {"l", l}}));
      }
    }
  }
}

void small_maps(Recorder& rec, int d, int n, ResourceCap cap) {
  std::set<std::string> fc;
  std::set<std::string> rev;
  for (const auto& p : gen_fc_paths(d, n, cap)) fc.insert(p.letters());
  for (const auto& p : gen_reverse_paths(d, n, cap)) rev.insert(p.letters());
  std::set<std::string> img_phi;
  std::set<std::string> img_bar;
  std::set<std::string> img_psi;
  for (const auto& t : gen_trees(d, n, cap)) {
    const auto e = encode(t);
    const LatticePath a = phi(t);
    const LatticePath b = phibar(t);
    const LatticePath c = psi(t);
    rec.check(phi_inv(a) == t, "phi round trip " + e);
    rec.check(phibar_inv(b) == t, "phibar round trip " + e);
    rec.check(psi_inv(c) == t, "psi round trip " + e);
    img_phi.insert(a.letters());
    img_bar.insert(b.letters());
    img_psi.insert(c.letters());
  }
  const auto where = cell({{"d", d}, {"n", n}});
  rec.check(img_phi == fc, "phi image differs from FC paths " + where);
  rec.check(img_psi == fc, "psi image differs from FC paths " + where);
  rec.check(img_bar == rev, "phibar image differs from reverse paths " + where);
}

void main_map(Recorder& rec, int d, int n, const std::vector<Marked>& pairs) {
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; k + l <= n; ++l) {
      const auto where = cell({{"d", d}, {"n", n}, {"k", k}, {"l", l}});
      std::set<std::string> images;
      long long domain = 0;
      for (const auto& m : pairs) {
        if (m.st.outdegree < k || m.st.level < l) continue;
        ++domain;
        const MarkedTree mt{m.tree, m.v};
        const PhiImage img = phi_main(mt, k, l);
        const bool fits = img.path_hat.up_count() == n - k - l &&
                          img.path_hat.down_count() == d * n + l && img.p.length() == l;
        rec.check(fits, "main map shape " + where + " at " + key(m.tree, m.v));
        images.insert(format_seq(img.p) + encode(img.path_hat));
        rec.check(phi_main_inv(img, d, n, k, l) == mt,
                  "main map round trip " + where + " at " + key(m.tree, m.v));
      }
      rec.equal(Count(domain), count_atleast(d, n, k, l), "main map domain " + where);
      rec.equal(Count(static_cast<long long>(images.size())), Count(domain),
                "main map injective " + where);
    }
  }
}

void cut_and_paste(Recorder& rec, int d, int n, const std::vector<Marked>& pairs) {
  for (int l = 1; l <= n; ++l) {
    for (int i = d; i <= 2 * d; i += d) {
      for (int k = 0; k <= 2 * d; k += d) {
        const auto where = cell({{"d", d}, {"n", n}, {"i", i}, {"k", k}, {"l", l}});
        std::set<std::string> image;
        std::set<std::string> target;
        for (const auto& m : pairs) {
          if (m.st.level >= l && m.st.child_count >= i + k) target.insert(key(m.tree, m.v));
          if (m.st.level < l || m.st.global_elders < i || m.st.child_count < k) continue;
          const MarkedTree mt{m.tree, m.v};
          const MarkedTree g = gamma(mt, i, 0);
          image.insert(key(g.tree, g.v));
          rec.check(gamma_inv(g, i, 0) == mt, "gamma round trip " + where + " at " + key(m.tree, m.v));
        }
        rec.check(image == target, "gamma image " + where);
      }
    }
    for (int i = 0; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        const auto where = cell({{"d", d}, {"n", n}, {"i", i}, {"j", j}, {"l", l}});
        std::set<std::string> image;
        std::set<std::string> target;
        for (const auto& m : pairs) {
          if (m.st.level >= l && m.st.global_elders >= i + j) target.insert(key(m.tree, m.v));
          if (m.st.level < l || m.st.global_elders < i || m.st.global_youngers < j) continue;
          const MarkedTree mt{m.tree, m.v};
          const MarkedTree x = exchange_to_youngest_sibling(mt, j);
          image.insert(key(x.tree, x.v));
          rec.check(exchange_to_elder_sibling(x, j) == mt,
                    "exchange round trip " + where + " at " + key(m.tree, m.v));
        }
        rec.check(image == target, "exchange image " + where);
      }
    }
  }
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Formulas:
      return "formulas";
    case Suite::Bijections:
      return "bijections";
    case Suite::Sieve:
      return "sieve";
    case Suite::Telescoping:
      return "telescoping";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites()) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::vector<Suite> all_suites() {
  return {Suite::Formulas, Suite::Bijections, Suite::Sieve, Suite::Telescoping};
}

CellReport run_suite(Suite suite, int d, int n, ResourceCap cap) {
  if (d < 1 || n < 1) throw DomainError("verify needs d >= 1 and n >= 1");
  CellReport report;
  report.d = d;
  report.n = n;
  report.suite = suite;
  Recorder rec(report);
  switch (suite) {
    case Suite::Formulas:
      formulas(rec, d, n, cap);
      break;
    case Suite::Sieve:
      sieve(rec, d, n);
      break;
    case Suite::Telescoping:
      telescoping(rec, d, n, cap);
      break;
    case Suite::Bijections: {
      small_maps(rec, d, n, cap);
      const auto pairs = all_marked(d, n, cap);
      main_map(rec, d, n, pairs);
      cut_and_paste(rec, d, n, pairs);
      break;
    }
  }
  return report;
}

}  // namespace fusscat
