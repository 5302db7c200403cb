#include "fusscat/bijections.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>

#include "fusscat/errors.hpp"

namespace fusscat {

namespace {

using Steps = std::vector<Step>;

Vertex& node(Vertex& root, const std::vector<AddrStep>& steps, std::size_t depth) {
  Vertex* cur = &root;
  for (std::size_t i = 0; i < depth; ++i) {
    cur = &cur->tuplets[static_cast<std::size_t>(steps[i].tuplet)]
               .children[static_cast<std::size_t>(steps[i].position)];
  }
  return *cur;
}

void phi_rec(const Vertex& v, Steps& out) {
  for (const auto& t : v.tuplets) {
    out.push_back(Step::Up);
    for (const auto& c : t.children) {
      phi_rec(c, out);
      out.push_back(Step::Down);
    }
  }
}

void phibar_rec(const Vertex& v, Steps& out) {
  for (const auto& t : v.tuplets) {
    for (const auto& c : t.children) {
      out.push_back(Step::Down);
      phibar_rec(c, out);
    }
    out.push_back(Step::Up);
  }
}

bool parse_phi(const Steps& s, std::size_t& i, int d, Vertex& out) {
  while (i < s.size() && s[i] == Step::Up) {
    ++i;
    Tuplet t;
    t.children.resize(static_cast<std::size_t>(d));
    for (auto& c : t.children) {
      if (!parse_phi(s, i, d, c)) return false;
      if (i >= s.size() || s[i] != Step::Down) return false;
      ++i;
    }
    out.tuplets.push_back(std::move(t));
  }
  return true;
}

void word_rec(const Vertex& v, std::vector<int>& out) {
  out.push_back(static_cast<int>(v.tuplets.size()));
  for (const auto& t : v.tuplets) {
    for (const auto& c : t.children) word_rec(c, out);
  }
}

Steps psi_steps(const Vertex& v) {
  std::vector<int> word;
  word_rec(v, word);
  Steps out;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(word[i]), Step::Up);
    out.push_back(Step::Down);
  }
  return out;
}

Steps phi_steps(const Vertex& v) {
  Steps out;
  phi_rec(v, out);
  return out;
}

Steps phibar_steps(const Vertex& v) {
  Steps out;
  phibar_rec(v, out);
  return out;
}

void require_fc(const LatticePath& path, const char* who) {
  if (!path.is_fuss_catalan()) {
    throw DomainError(std::string(who) + ": not a Fuss-Catalan path: " + encode(path));
  }
}

// Lukasiewicz blocks U^w D, one per vertex; the last block carries the
// appended final D.
std::vector<int> blocks(const Steps& s) {
  std::vector<int> word;
  int run = 0;
  for (Step x : s) {
    if (x == Step::Up) {
      ++run;
    } else {
      word.push_back(run);
      run = 0;
    }
  }
  return word;
}

std::vector<int> heights_of(const Steps& s, int d) {
  std::vector<int> h(s.size() + 1, 0);
  for (std::size_t i = 0; i < s.size(); ++i) h[i + 1] = h[i] + (s[i] == Step::Up ? d : -1);
  return h;
}

void check_marked(const MarkedTree& m) {
  if (!m.tree.contains(m.v)) {
    throw AddressError("vertex " + format_addr(m.v) + " is not in the tree");
  }
}

}  // namespace

LatticePath phi(const TupletTree& tree) {
  return LatticePath(tree.arity(), phi_steps(tree.root()));
}

TupletTree phi_inv(const LatticePath& path) {
  require_fc(path, "phi_inv");
  Vertex root;
  std::size_t i = 0;
  if (!parse_phi(path.steps(), i, path.arity(), root) || i != path.size()) {
    throw DomainError("phi_inv: path does not decode to a tuplet tree: " + encode(path));
  }
  return TupletTree(path.arity(), std::move(root));
}

LatticePath phibar(const TupletTree& tree) {
  return LatticePath(tree.arity(), phibar_steps(tree.root()));
}

TupletTree phibar_inv(const LatticePath& path) {
  if (!path.is_reverse_fuss_catalan()) {
    throw DomainError("phibar_inv: not a reverse Fuss-Catalan path: " + encode(path));
  }
  return mirror(phi_inv(reversed(path)));
}

LatticePath psi(const TupletTree& tree) {
  return LatticePath(tree.arity(), psi_steps(tree.root()));
}

TupletTree psi_inv(const LatticePath& path) {
  require_fc(path, "psi_inv");
  Steps s = path.steps();
  s.push_back(Step::Down);
  return TupletTree::from_outdegrees(path.arity(), blocks(s));
}

LatticePath phi_main_path(const MarkedTree& marked, int k, int l) {
  check_marked(marked);
  const TupletTree& tree = marked.tree;
  const int d = tree.arity();
  if (k < 0 || l < 0) throw DomainError("k and l must be nonnegative");
  const VertexStats st = stats(tree, marked.v);
  if (st.outdegree < k) {
    throw DomainError("outdegree " + std::to_string(st.outdegree) + " of " +
                      format_addr(marked.v) + " is below k = " + std::to_string(k));
  }
  if (st.level < l) {
    throw DomainError("level " + std::to_string(st.level) + " of " + format_addr(marked.v) +
                      " is below l = " + std::to_string(l));
  }

  if (l == 0) {
    // Rotate the Lukasiewicz word so that it starts with v's block.
    const auto order = preorder(tree);
    const auto word = tree.outdegree_word();
    const auto at = std::find(order.begin(), order.end(), marked.v) - order.begin();
    long long j = 0;
    for (std::ptrdiff_t q = 0; q < at; ++q) j += word[static_cast<std::size_t>(q)] + 1;
    LatticePath w = psi(tree);
    w.push(Step::Down);
    return rho(w, j);
  }

  Vertex root = tree.root();
  auto addr = marked.v.steps;
  const auto depth = addr.size();
  const auto ul = static_cast<std::size_t>(l);

  // Step 1: put v_0 .. v_{l-1} at the youngest position of their tuplets.
  for (std::size_t i = 0; i < ul; ++i) {
    const std::size_t idx = depth - 1 - i;
    auto& tup = node(root, addr, idx).tuplets[static_cast<std::size_t>(addr[idx].tuplet)];
    std::swap(tup.children[static_cast<std::size_t>(addr[idx].position)],
              tup.children[static_cast<std::size_t>(d - 1)]);
    addr[idx].position = d - 1;
  }

  // Step 2: cut D_v, then R_1 .. R_{l-1} and the root's trailing tuplets.
  Vertex dv;
  dv.tuplets = std::move(node(root, addr, depth).tuplets);
  node(root, addr, depth).tuplets.clear();

  auto cut_after = [&](std::size_t prefix) {
    Vertex& u = node(root, addr, prefix);
    const auto keep = static_cast<std::ptrdiff_t>(addr[prefix].tuplet) + 1;
    Vertex r;
    r.tuplets.assign(std::make_move_iterator(u.tuplets.begin() + keep),
                     std::make_move_iterator(u.tuplets.end()));
    u.tuplets.erase(u.tuplets.begin() + keep, u.tuplets.end());
    return r;
  };
  std::vector<Vertex> rs;
  for (std::size_t i = 1; i < ul; ++i) rs.push_back(cut_after(depth - i));
  rs.push_back(cut_after(0));

  Steps out = psi_steps(dv);
  out.push_back(Step::Down);
  for (const auto& r : rs) {
    phi_rec(r, out);
    out.push_back(Step::Down);
  }

  // In the bar walk the q-th D enters the (q+1)-th vertex in preorder.
  const TupletTree rest(d, root);
  const auto order = preorder(rest);
  const auto q = std::find(order.begin(), order.end(), VertexAddr{addr}) - order.begin() - 1;
  const Steps bar = phibar_steps(root);
  std::ptrdiff_t seen = -1;
  long long entry = -1;
  for (std::size_t s = 0; s < bar.size(); ++s) {
    if (bar[s] == Step::Down && ++seen == q) {
      entry = static_cast<long long>(s);
      break;
    }
  }
  const LatticePath rotated = rho(LatticePath(d, bar), entry + 1 + l);
  out.insert(out.end(), rotated.steps().begin(), rotated.steps().end());

  LatticePath result(d, std::move(out));
  const int n = tree.tuplet_count();
  const auto& s = result.steps();
  bool ok = result.size() == static_cast<std::size_t>((d + 1) * n + l + 1) &&
            result.final_height() == -(l + 1);
  for (int i = 0; ok && i < k; ++i) ok = s[static_cast<std::size_t>(i)] == Step::Up;
  for (int i = 0; ok && i < l; ++i) ok = s[s.size() - 1 - static_cast<std::size_t>(i)] == Step::Up;
  ok = ok && s[s.size() - 1 - ul] == Step::Down;
  if (!ok) throw StructuralError("assembled path has the wrong shape: " + result.letters());
  return result;
}

PhiImage phi_main(const MarkedTree& marked, int k, int l) {
  const LatticePath full = phi_main_path(marked, k, l);
  const int d = marked.tree.arity();
  PhiImage img;
  const auto& s = full.steps();
  img.path_hat = LatticePath(
      d, Steps(s.begin() + k, s.end() - (l + 1)), d * k);
  if (l > 0) {
    const auto& addr = marked.v.steps;
    for (int i = 0; i < l; ++i) {
      img.p.entries.push_back(addr[addr.size() - 1 - static_cast<std::size_t>(i)].position);
    }
  }
  return img;
}

MarkedTree phi_main_inv(const PhiImage& image, int d, int n, int k, int l) {
  return phi_main_inv(image.p, image.path_hat, d, n, k, l);
}

MarkedTree phi_main_inv(const SiblingSeq& p, const LatticePath& path_hat, int d, int n, int k,
                        int l) {
  if (d < 1) throw DomainError("arity d must be at least 1");
  if (n < 0 || k < 0 || l < 0) throw DomainError("n, k, l must be nonnegative");
  if (path_hat.arity() != d) throw DomainError("path arity does not match d");
  if (p.length() != l) {
    throw DomainError("sequence " + format_seq(p) + " must have length l = " + std::to_string(l));
  }
  for (int e : p.entries) {
    if (e < 0 || e >= d) throw DomainError("sequence entries must lie in 0.." + std::to_string(d - 1));
  }
  if (path_hat.up_count() != n - k - l || path_hat.down_count() != d * n + l) {
    throw DomainError("path must have n-k-l = " + std::to_string(n - k - l) + " U and dn+l = " +
                      std::to_string(d * n + l) + " D steps");
  }
  if (path_hat.start_height() != d * k) {
    throw DomainError("path must start at height dk = " + std::to_string(d * k));
  }

  Steps s(static_cast<std::size_t>(k), Step::Up);
  s.insert(s.end(), path_hat.steps().begin(), path_hat.steps().end());
  s.push_back(Step::Down);
  s.insert(s.end(), static_cast<std::size_t>(l), Step::Up);
  const auto h = heights_of(s, d);

  if (l == 0) {
    // Cycle lemma: the only rotation with every proper prefix >= 0 starts
    // right after the leftmost minimum.
    const auto r = std::min_element(h.begin(), h.end()) - h.begin();
    const long long len = static_cast<long long>(s.size());
    const long long j = len - r;
    const LatticePath w = rho(LatticePath(d, s), r);
    const auto word = blocks(w.steps());
    const TupletTree tree = TupletTree::from_outdegrees(d, word);
    long long pos = 0;
    std::size_t b = 0;
    while (pos < j) pos += word[b++] + 1;
    return MarkedTree{tree, preorder(tree)[b]};
  }

  // Leftmost down-crossings from -i to -(i+1).
  std::vector<std::size_t> cross;
  for (std::size_t i = 0, target = 0; i < s.size() && cross.size() <= static_cast<std::size_t>(l); ++i) {
    if (h[i] == -static_cast<int>(target) && h[i + 1] == -static_cast<int>(target) - 1) {
      cross.push_back(i);
      ++target;
    }
  }
  if (cross.size() != static_cast<std::size_t>(l) + 1) {
    throw StructuralError("rebuilt path lacks the expected down-crossings");
  }

  auto piece = [&](std::size_t from, std::size_t to) {
    return LatticePath(d, Steps(s.begin() + static_cast<std::ptrdiff_t>(from),
                                s.begin() + static_cast<std::ptrdiff_t>(to)));
  };
  const TupletTree dv = psi_inv(piece(0, cross[0]));
  std::vector<TupletTree> rs;
  for (std::size_t i = 1; i < cross.size(); ++i) rs.push_back(phi_inv(piece(cross[i - 1] + 1, cross[i])));

  const LatticePath pl = piece(cross.back() + 1, s.size());
  const auto hl = pl.heights();
  const long long big_n = static_cast<long long>(pl.size());
  const auto t = std::max_element(hl.begin(), hl.end() - 1) - hl.begin();
  const long long m = big_n - t;
  const LatticePath q = rho(pl, t);
  const TupletTree rest = phibar_inv(q);

  const long long entry = m - l - 1;
  const auto& qs = q.steps();
  if (entry < 0 || qs[static_cast<std::size_t>(entry)] != Step::Down) {
    throw StructuralError("rotation does not land on a down-step");
  }
  const auto downs_before = std::count(qs.begin(), qs.begin() + entry, Step::Down);
  const VertexAddr v = preorder(rest)[static_cast<std::size_t>(downs_before) + 1];
  if (v.level() < l) throw StructuralError("recovered vertex sits too shallow");

  Vertex root = rest.root();
  auto addr = v.steps;
  const auto depth = addr.size();
  node(root, addr, depth).tuplets = dv.root().tuplets;
  for (std::size_t i = 1; i < static_cast<std::size_t>(l); ++i) {
    auto& tl = node(root, addr, depth - i).tuplets;
    const auto& add = rs[i - 1].root().tuplets;
    tl.insert(tl.end(), add.begin(), add.end());
  }
  root.tuplets.insert(root.tuplets.end(), rs.back().root().tuplets.begin(),
                      rs.back().root().tuplets.end());

  for (std::size_t i = static_cast<std::size_t>(l); i-- > 0;) {
    const std::size_t idx = depth - 1 - i;
    auto& tup = node(root, addr, idx).tuplets[static_cast<std::size_t>(addr[idx].tuplet)];
    std::swap(tup.children[static_cast<std::size_t>(d - 1)],
              tup.children[static_cast<std::size_t>(p.entries[i])]);
    addr[idx].position = p.entries[i];
  }
  return MarkedTree{TupletTree(d, std::move(root)), VertexAddr{std::move(addr)}};
}

namespace {

void require_gamma_args(int d, int i, int j) {
  if (i < 0 || j < 0 || i % d != 0 || j % d != 0) {
    throw DomainError("i and j must be nonnegative multiples of d = " + std::to_string(d));
  }
}

}  // namespace

MarkedTree gamma(const MarkedTree& marked, int i, int j) {
  check_marked(marked);
  const int d = marked.tree.arity();
  require_gamma_args(d, i, j);
  if (i == 0 && j == 0) return marked;
  if (marked.v.is_root()) throw DomainError("gamma needs a non-root vertex");
  const VertexStats st = stats(marked.tree, marked.v);
  if (st.global_elders < i || st.global_youngers < j) {
    throw DomainError("vertex has " + std::to_string(st.global_elders) + " elder and " +
                      std::to_string(st.global_youngers) + " younger siblings, needs " +
                      std::to_string(i) + " and " + std::to_string(j));
  }
  const auto a = static_cast<std::ptrdiff_t>(i / d);
  const auto b = static_cast<std::ptrdiff_t>(j / d);
  Vertex root = marked.tree.root();
  auto addr = marked.v.steps;
  Vertex& u = node(root, addr, addr.size() - 1);
  std::vector<Tuplet> left(std::make_move_iterator(u.tuplets.begin()),
                           std::make_move_iterator(u.tuplets.begin() + a));
  std::vector<Tuplet> right(std::make_move_iterator(u.tuplets.end() - b),
                            std::make_move_iterator(u.tuplets.end()));
  u.tuplets.erase(u.tuplets.end() - b, u.tuplets.end());
  u.tuplets.erase(u.tuplets.begin(), u.tuplets.begin() + a);
  addr.back().tuplet -= static_cast<int>(a);
  Vertex& v = node(root, addr, addr.size());
  v.tuplets.insert(v.tuplets.begin(), std::make_move_iterator(left.begin()),
                   std::make_move_iterator(left.end()));
  v.tuplets.insert(v.tuplets.end(), std::make_move_iterator(right.begin()),
                   std::make_move_iterator(right.end()));
  return MarkedTree{TupletTree(d, std::move(root)), VertexAddr{std::move(addr)}};
}

MarkedTree gamma_inv(const MarkedTree& marked, int i, int j) {
  check_marked(marked);
  const int d = marked.tree.arity();
  require_gamma_args(d, i, j);
  if (i == 0 && j == 0) return marked;
  if (marked.v.is_root()) throw DomainError("gamma_inv needs a non-root vertex");
  const auto a = static_cast<std::ptrdiff_t>(i / d);
  const auto b = static_cast<std::ptrdiff_t>(j / d);
  const VertexStats st = stats(marked.tree, marked.v);
  if (st.outdegree < a + b) {
    throw DomainError("vertex has only " + std::to_string(st.outdegree) + " tuplets, needs " +
                      std::to_string(a + b));
  }
  Vertex root = marked.tree.root();
  auto addr = marked.v.steps;
  Vertex& v = node(root, addr, addr.size());
  std::vector<Tuplet> left(std::make_move_iterator(v.tuplets.begin()),
                           std::make_move_iterator(v.tuplets.begin() + a));
  std::vector<Tuplet> right(std::make_move_iterator(v.tuplets.end() - b),
                            std::make_move_iterator(v.tuplets.end()));
  v.tuplets.erase(v.tuplets.end() - b, v.tuplets.end());
  v.tuplets.erase(v.tuplets.begin(), v.tuplets.begin() + a);
  Vertex& u = node(root, addr, addr.size() - 1);
  u.tuplets.insert(u.tuplets.begin(), std::make_move_iterator(left.begin()),
                   std::make_move_iterator(left.end()));
  u.tuplets.insert(u.tuplets.end(), std::make_move_iterator(right.begin()),
                   std::make_move_iterator(right.end()));
  addr.back().tuplet += static_cast<int>(a);
  return MarkedTree{TupletTree(d, std::move(root)), VertexAddr{std::move(addr)}};
}

namespace {

MarkedTree exchange_with(const MarkedTree& marked, int offset) {
  const int d = marked.tree.arity();
  const VertexStats st = stats(marked.tree, marked.v);
  const int g = st.global_elders + offset;
  const VertexAddr w = marked.v.parent().child(g / d, g % d);
  return MarkedTree{exchange_subtrees(marked.tree, marked.v, w), w};
}

}  // namespace

MarkedTree exchange_to_youngest_sibling(const MarkedTree& marked, int jth) {
  check_marked(marked);
  if (jth < 0) throw DomainError("sibling offset must be nonnegative");
  if (jth == 0) return marked;
  if (marked.v.is_root()) throw DomainError("the root has no siblings");
  if (stats(marked.tree, marked.v).global_youngers < jth) {
    throw DomainError("vertex has fewer than " + std::to_string(jth) + " younger siblings");
  }
  return exchange_with(marked, jth);
}

MarkedTree exchange_to_elder_sibling(const MarkedTree& marked, int jth) {
  check_marked(marked);
  if (jth < 0) throw DomainError("sibling offset must be nonnegative");
  if (jth == 0) return marked;
  if (marked.v.is_root()) throw DomainError("the root has no siblings");
  if (stats(marked.tree, marked.v).global_elders < jth) {
    throw DomainError("vertex has fewer than " + std::to_string(jth) + " elder siblings");
  }
  return exchange_with(marked, -jth);
}

}  // namespace fusscat
