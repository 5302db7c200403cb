#include "fusscat/tree.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fusscat/errors.hpp"
#include "text.hpp"

namespace fusscat {

VertexAddr VertexAddr::parent() const {
  if (steps.empty()) throw AddressError("the root has no parent");
  VertexAddr p = *this;
  p.steps.pop_back();
  return p;
}

VertexAddr VertexAddr::child(int tuplet, int position) const {
  VertexAddr c = *this;
  c.steps.push_back({tuplet, position});
  return c;
}

bool VertexAddr::is_ancestor_of(const VertexAddr& other) const {
  if (steps.size() > other.steps.size()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] != other.steps[i]) return false;
  }
  return true;
}

std::string format_addr(const VertexAddr& addr) {
  if (addr.is_root()) return "root";
  std::string out;
  for (std::size_t i = 0; i < addr.steps.size(); ++i) {
    if (i) out += '/';
    out += std::to_string(addr.steps[i].tuplet);
    out += '.';
    out += std::to_string(addr.steps[i].position);
  }
  return out;
}

VertexAddr parse_addr(std::string_view text) {
  VertexAddr addr;
  if (text == "root") return addr;
  if (text.empty()) throw ParseError("empty vertex address");
  for (auto part : detail::split(text, '/')) {
    auto dot = part.find('.');
    if (dot == std::string_view::npos) {
      throw ParseError("vertex address step '" + std::string(part) + "' is not of the form t.p");
    }
    addr.steps.push_back({detail::parse_int(part.substr(0, dot), "tuplet index"),
                          detail::parse_int(part.substr(dot + 1), "position")});
  }
  return addr;
}

namespace {

void collect_violations(int d, const Vertex& v, VertexAddr& here, std::vector<Violation>& out) {
  for (std::size_t t = 0; t < v.tuplets.size(); ++t) {
    const auto& tup = v.tuplets[t];
    if (static_cast<int>(tup.children.size()) != d) {
      std::ostringstream msg;
      msg << "tuplet has " << tup.children.size() << " children, arity is " << d;
      out.push_back({here, static_cast<int>(t), msg.str()});
    }
    for (std::size_t p = 0; p < tup.children.size(); ++p) {
      here.steps.push_back({static_cast<int>(t), static_cast<int>(p)});
      collect_violations(d, tup.children[p], here, out);
      here.steps.pop_back();
    }
  }
}

void outdegrees(const Vertex& v, std::vector<int>& out) {
  out.push_back(static_cast<int>(v.tuplets.size()));
  for (const auto& t : v.tuplets) {
    for (const auto& c : t.children) outdegrees(c, out);
  }
}

Vertex build(int d, std::span<const int> word, std::size_t& pos) {
  Vertex v;
  const int m = word[pos++];
  v.tuplets.resize(static_cast<std::size_t>(m));
  for (auto& t : v.tuplets) {
    t.children.reserve(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) t.children.push_back(build(d, word, pos));
  }
  return v;
}

const Vertex* resolve(const Vertex& root, const VertexAddr& addr) {
  const Vertex* v = &root;
  for (const auto& s : addr.steps) {
    if (s.tuplet < 0 || s.tuplet >= static_cast<int>(v->tuplets.size())) return nullptr;
    const auto& tup = v->tuplets[static_cast<std::size_t>(s.tuplet)];
    if (s.position < 0 || s.position >= static_cast<int>(tup.children.size())) return nullptr;
    v = &tup.children[static_cast<std::size_t>(s.position)];
  }
  return v;
}

Vertex* resolve_mut(Vertex& root, const VertexAddr& addr) {
  return const_cast<Vertex*>(resolve(root, addr));
}

void collect_preorder(const Vertex& v, VertexAddr& here, std::vector<VertexAddr>& out) {
  out.push_back(here);
  for (std::size_t t = 0; t < v.tuplets.size(); ++t) {
    const auto& tup = v.tuplets[t];
    for (std::size_t p = 0; p < tup.children.size(); ++p) {
      here.steps.push_back({static_cast<int>(t), static_cast<int>(p)});
      collect_preorder(tup.children[p], here, out);
      here.steps.pop_back();
    }
  }
}

void mirror_in_place(Vertex& v) {
  std::reverse(v.tuplets.begin(), v.tuplets.end());
  for (auto& t : v.tuplets) {
    std::reverse(t.children.begin(), t.children.end());
    for (auto& c : t.children) mirror_in_place(c);
  }
}

}  // namespace

int count_tuplets(const Vertex& v) {
  int n = static_cast<int>(v.tuplets.size());
  for (const auto& t : v.tuplets) {
    for (const auto& c : t.children) n += count_tuplets(c);
  }
  return n;
}

std::vector<Violation> validate(int d, const Vertex& root) {
  std::vector<Violation> out;
  if (d < 1) out.push_back({{}, -1, "arity must be at least 1, got " + std::to_string(d)});
  VertexAddr here;
  collect_violations(d, root, here, out);
  return out;
}

TupletTree::TupletTree(int d) : TupletTree(d, Vertex{}) {}

TupletTree::TupletTree(int d, Vertex root) : d_(d), root_(std::move(root)) {
  auto violations = validate(d_, root_);
  if (!violations.empty()) {
    const auto& first = violations.front();
    throw StructuralError("invalid tuplet tree at " + format_addr(first.at) + ": " + first.what);
  }
  tuplets_ = count_tuplets(root_);
}

TupletTree TupletTree::from_outdegrees(int d, std::span<const int> word) {
  if (d < 1) throw StructuralError("arity must be at least 1");
  if (word.empty()) throw StructuralError("empty outdegree word");
  // Lukasiewicz condition: open slots stay positive until the last vertex.
  long long open = 1;
  long long total = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 0) throw StructuralError("negative outdegree in word");
    if (open <= 0) throw StructuralError("outdegree word closes before its end");
    open += static_cast<long long>(d) * word[i] - 1;
    total += word[i];
  }
  if (open != 0) throw StructuralError("outdegree word does not close a tree");
  if (static_cast<long long>(word.size()) != d * total + 1) {
    throw StructuralError("outdegree word length is not dn+1");
  }
  std::size_t pos = 0;
  return TupletTree(d, build(d, word, pos));
}

std::vector<int> TupletTree::outdegree_word() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(vertex_count()));
  outdegrees(root_, out);
  return out;
}

const Vertex& TupletTree::at(const VertexAddr& addr) const {
  const Vertex* v = resolve(root_, addr);
  if (!v) throw AddressError("address " + format_addr(addr) + " does not resolve");
  return *v;
}

bool TupletTree::contains(const VertexAddr& addr) const { return resolve(root_, addr) != nullptr; }

bool operator==(const TupletTree& a, const TupletTree& b) {
  return a.d_ == b.d_ && a.tuplets_ == b.tuplets_ && a.outdegree_word() == b.outdegree_word();
}

std::strong_ordering operator<=>(const TupletTree& a, const TupletTree& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  return a.outdegree_word() <=> b.outdegree_word();
}

std::vector<VertexAddr> preorder(const TupletTree& tree) {
  std::vector<VertexAddr> out;
  out.reserve(static_cast<std::size_t>(tree.vertex_count()));
  VertexAddr here;
  collect_preorder(tree.root(), here, out);
  return out;
}

VertexStats stats(const TupletTree& tree, const VertexAddr& v) {
  const Vertex& node = tree.at(v);
  const int d = tree.arity();
  VertexStats s;
  s.level = v.level();
  s.outdegree = static_cast<int>(node.tuplets.size());
  s.child_count = d * s.outdegree;
  if (v.is_root()) return s;
  const Vertex& parent = tree.at(v.parent());
  const auto [t, p] = v.steps.back();
  const int parent_out = static_cast<int>(parent.tuplets.size());
  s.tuplet_elders = p;
  s.global_elders = d * t + p;
  s.global_youngers = d * (parent_out - t - 1) + (d - 1 - p);
  return s;
}

TupletTree descendant_subtree(const TupletTree& tree, const VertexAddr& v) {
  return TupletTree(tree.arity(), tree.at(v));
}

TupletTree exchange_subtrees(const TupletTree& tree, const VertexAddr& v, const VertexAddr& w) {
  if (!tree.contains(v)) throw AddressError("address " + format_addr(v) + " does not resolve");
  if (!tree.contains(w)) throw AddressError("address " + format_addr(w) + " does not resolve");
  if (v == w) return tree;
  if (v.is_ancestor_of(w) || w.is_ancestor_of(v)) {
    throw StructuralError("cannot exchange " + format_addr(v) + " and " + format_addr(w) +
                          ": one is an ancestor of the other");
  }
  Vertex root = tree.root();
  std::swap(*resolve_mut(root, v), *resolve_mut(root, w));
  return TupletTree(tree.arity(), std::move(root));
}

TupletTree mirror(const TupletTree& tree) {
  Vertex root = tree.root();
  mirror_in_place(root);
  return TupletTree(tree.arity(), std::move(root));
}

std::string encode(const TupletTree& tree) {
  std::string out = "d=" + std::to_string(tree.arity()) + ";";
  auto word = tree.outdegree_word();
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

TupletTree parse_tree(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || !text.starts_with("d=")) {
    throw ParseError("tree encoding must look like 'd=<d>;<outdegrees>'");
  }
  const int d = detail::parse_int(text.substr(2, semi - 2), "arity");
  if (d < 1) throw ParseError("arity must be at least 1");
  std::vector<int> word;
  for (auto part : detail::split(text.substr(semi + 1), ',')) {
    word.push_back(detail::parse_int(part, "outdegree"));
  }
  try {
    return TupletTree::from_outdegrees(d, word);
  } catch (const StructuralError& e) {
    throw ParseError(std::string("not a tree encoding: ") + e.what());
  }
}

}  // namespace fusscat
