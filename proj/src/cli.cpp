#include "fusscat/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fusscat/bijections.hpp"
#include "fusscat/counting.hpp"
#include "fusscat/errors.hpp"
#include "fusscat/generate.hpp"
#include "fusscat/oracle.hpp"
#include "fusscat/verify.hpp"
#include "json.hpp"
#include "text.hpp"

namespace fusscat::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Range {
  int lo = 0;
  int hi = -1;
};

Range parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = detail::parse_int(text, what);
    } else {
      r.lo = detail::parse_int(std::string_view(text).substr(0, dots), what);
      r.hi = detail::parse_int(std::string_view(text).substr(dots + 2), what);
    }
  } catch (const ParseError&) {
    throw UsageError(std::string(what) + " must look like 'a..b' or 'a', got '" + text + "'");
  }
  return r;
}

ResourceCap resolve_cap(const std::optional<std::uint64_t>& flag) {
  if (flag) return ResourceCap{*flag};
  if (const char* env = std::getenv("FUSSCAT_CAP")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("FUSSCAT_CAP must be a nonnegative integer, got '" + std::string(s) + "'");
    }
    return ResourceCap{v};
  }
  return {};
}

// Rows are levels, columns outdegrees, with sum margins.
struct Matrix {
  std::vector<std::vector<Count>> rows;
  std::vector<Count> row_sums;
  std::vector<Count> col_sums;
  Count total = 0;
};

Matrix build_matrix(int d, int n, const std::string& source, ResourceCap cap) {
  Matrix m;
  std::optional<VertexHistogram> h;
  if (source == "oracle") h = vertex_histogram(d, n, cap);
  m.col_sums.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 0; l <= n; ++l) {
    std::vector<Count> row;
    Count sum = 0;
    for (int k = 0; k <= n; ++k) {
      Count c = h ? brute_count_exact(*h, k, l) : count_exact(d, n, k, l);
      sum += c;
      m.col_sums[static_cast<std::size_t>(k)] += c;
      row.push_back(std::move(c));
    }
    m.total += sum;
    m.row_sums.push_back(sum);
    m.rows.push_back(std::move(row));
  }
  return m;
}

void print_pretty(const Matrix& m, std::ostream& out) {
  std::size_t w = 3;
  auto widen = [&](const Count& c) { w = std::max(w, c.str().size()); };
  for (const auto& r : m.rows) std::for_each(r.begin(), r.end(), widen);
  std::for_each(m.row_sums.begin(), m.row_sums.end(), widen);
  widen(m.total);
  const auto cols = m.col_sums.size();
  auto cellw = [&](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };
  auto line = [&](const std::string& head, const std::vector<Count>& vals, const Count& sum) {
    out << std::setw(4) << head << " |";
    for (const auto& v : vals) out << cellw(v.str());
    out << " |" << cellw(sum.str()) << '\n';
  };
  out << std::setw(4) << "l\\k" << " |";
  for (std::size_t k = 0; k < cols; ++k) out << cellw(std::to_string(k));
  out << " |" << cellw("sum") << '\n';
  const std::string rule = std::string(5, '-') + '+' + std::string(cols * (w + 1) + 1, '-') + '+' +
                           std::string(w + 1, '-');
  out << rule << '\n';
  for (std::size_t l = 0; l < m.rows.size(); ++l) line(std::to_string(l), m.rows[l], m.row_sums[l]);
  out << rule << '\n';
  line("sum", m.col_sums, m.total);
}

void print_csv(const Matrix& m, std::ostream& out) {
  out << "level";
  for (std::size_t k = 0; k < m.col_sums.size(); ++k) out << ',' << k;
  out << ",sum\n";
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    out << l;
    for (const auto& c : m.rows[l]) out << ',' << c;
    out << ',' << m.row_sums[l] << '\n';
  }
  out << "sum";
  for (const auto& c : m.col_sums) out << ',' << c;
  out << ',' << m.total << '\n';
}

ojson strings(const std::vector<Count>& v) {
  auto a = ojson::array();
  for (const auto& c : v) a.push_back(c.str());
  return a;
}

struct CountOpts {
  int d = 0, n = 0, k = 0, level = 0, i = 0, j = 0;
  std::string mode = "atleast";
  bool json = false;
};

int do_count(const CountOpts& o, std::ostream& out) {
  Count value;
  if (o.mode != "refined" && (o.i != 0 || o.j != 0)) {
    throw UsageError("--i and --j only apply to --mode refined");
  }
  if (o.mode == "atleast") {
    value = count_atleast(o.d, o.n, o.k, o.level);
  } else if (o.mode == "exact") {
    value = count_exact(o.d, o.n, o.k, o.level);
  } else {
    value = count_refined(o.d, o.n, o.i, o.j, o.k, o.level);
  }
  if (o.json) {
    ojson j;
    j["params"] = {{"mode", o.mode}, {"d", o.d}, {"n", o.n}, {"k", o.k}, {"level", o.level}};
    if (o.mode == "refined") {
      j["params"]["i"] = o.i;
      j["params"]["j"] = o.j;
    }
    j["value"] = value.str();
    out << j.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kOk;
}

struct TableOpts {
  int d = 0, n = 0;
  std::string source = "formula";
  std::string format = "pretty";
};

int do_table(const TableOpts& o, ResourceCap cap, std::ostream& out) {
  if (o.n < 1) throw UsageError("table needs --n >= 1");
  const Matrix m = build_matrix(o.d, o.n, o.source, cap);
  if (o.format == "pretty") {
    print_pretty(m, out);
  } else if (o.format == "csv") {
    print_csv(m, out);
  } else {
    ojson j;
    j["d"] = o.d;
    j["n"] = o.n;
    j["source"] = o.source;
    auto rows = ojson::array();
    for (const auto& r : m.rows) rows.push_back(strings(r));
    j["rows"] = std::move(rows);
    j["row_sums"] = strings(m.row_sums);
    j["col_sums"] = strings(m.col_sums);
    j["total"] = m.total.str();
    out << j.dump(2) << '\n';
  }
  return kOk;
}

struct MapOpts {
  std::string direction = "forward";
  std::string tree, vertex, p, path;
  int n = -1, k = 0, level = 0;
  bool json = false;
};

int do_map(const MapOpts& o, std::ostream& out) {
  std::string a_name, b_name, a, b;
  if (o.direction == "forward") {
    if (o.tree.empty() || o.vertex.empty()) throw UsageError("forward map needs --tree and --vertex");
    const TupletTree t = parse_tree(o.tree);
    const VertexAddr v = parse_addr(o.vertex);
    const PhiImage img = phi_main(MarkedTree{t, v}, o.k, o.level);
    a_name = "p", a = format_seq(img.p);
    b_name = "path", b = encode(img.path_hat);
  } else {
    if (o.p.empty() || o.path.empty() || o.n < 0) {
      throw UsageError("inverse map needs --p, --path and --n");
    }
    const LatticePath hat = parse_path(o.path);
    const MarkedTree m = phi_main_inv(parse_seq(o.p), hat, hat.arity(), o.n, o.k, o.level);
    a_name = "tree", a = encode(m.tree);
    b_name = "vertex", b = format_addr(m.v);
  }
  if (o.json) {
    ojson j;
    j[a_name] = a;
    j[b_name] = b;
    out << j.dump() << '\n';
  } else {
    out << a_name << '=' << a << '\n' << b_name << '=' << b << '\n';
  }
  return kOk;
}

struct VerifyOpts {
  std::string d = "1..3", n = "1..4";
  std::vector<std::string> suites;
  bool json = false;
  int jobs = 0;
};

int do_verify(const VerifyOpts& o, ResourceCap cap, std::ostream& out) {
  const Range dr = parse_range(o.d, "--d");
  const Range nr = parse_range(o.n, "--n");
  if (dr.lo <= dr.hi && dr.lo < 1) throw UsageError("--d range must start at 1 or more");
  if (nr.lo <= nr.hi && nr.lo < 1) throw UsageError("--n range must start at 1 or more");
  std::vector<Suite> suites;
  if (o.suites.empty()) {
    suites = all_suites();
  } else {
    for (const auto& name : o.suites) {
      auto s = parse_suite(name);
      if (!s) throw UsageError("unknown suite '" + name + "'");
      suites.push_back(*s);
    }
  }

  struct Task {
    Suite suite;
    int d, n;
  };
  std::vector<Task> tasks;
  for (int d = dr.lo; d <= dr.hi; ++d) {
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (Suite s : suites) tasks.push_back({s, d, n});
    }
  }

  std::vector<CellReport> reports(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
      try {
        reports[t] = run_suite(tasks[t].suite, tasks[t].d, tasks[t].n, cap);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  unsigned jobs = o.jobs > 0 ? static_cast<unsigned>(o.jobs) : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const CellReport& r) { return !r.passed(); });
  if (o.json) {
    ojson j;
    auto cells = ojson::array();
    for (const auto& r : reports) {
      cells.push_back({{"suite", suite_name(r.suite)},
                       {"d", r.d},
                       {"n", r.n},
                       {"checks", r.checks},
                       {"passed", r.passed()},
                       {"failures", r.failures}});
    }
    j["cells"] = std::move(cells);
    j["failed"] = failed;
    j["passed"] = failed == 0;
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(12) << suite_name(r.suite)
          << std::right << "d=" << r.d << " n=" << r.n << "  (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) out << "    " << f << '\n';
    }
    out << reports.size() << " cells, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

struct ListOpts {
  int d = 0, n = 0, k = 0, level = 0;
  std::string what = "trees";
};

int do_list(const ListOpts& o, ResourceCap cap, std::ostream& out) {
  if (o.what == "trees") {
    for (const auto& t : gen_trees(o.d, o.n, cap)) out << encode(t) << '\n';
    return kOk;
  }
  std::optional<PathStream> s;
  if (o.what == "fc") {
    s.emplace(gen_fc_paths(o.d, o.n, cap));
  } else if (o.what == "reverse") {
    s.emplace(gen_reverse_paths(o.d, o.n, cap));
  } else {
    s.emplace(gen_free_paths(o.d, o.n, o.k, o.level, cap));
  }
  for (const auto& p : *s) out << encode(p) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of d-tuplet trees and Fuss-Catalan paths", "fusscat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::uint64_t> cap_flag;
  app.add_option("--cap", cap_flag, "Resource cap on enumerated objects (env FUSSCAT_CAP)");

  CountOpts co;
  auto* count = app.add_subcommand("count", "Closed-form vertex counts");
  count->add_option("--d", co.d, "Tuplet arity")->required()->check(CLI::PositiveNumber);
  count->add_option("--n", co.n, "Number of tuplets")->required()->check(CLI::PositiveNumber);
  count->add_option("--k", co.k, "Outdegree (children for refined)")->check(CLI::NonNegativeNumber);
  count->add_option("--level", co.level, "Level")->check(CLI::NonNegativeNumber);
  count->add_option("--i", co.i, "Elder siblings (refined)")->check(CLI::NonNegativeNumber);
  count->add_option("--j", co.j, "Younger siblings (refined)")->check(CLI::NonNegativeNumber);
  count->add_option("--mode", co.mode)->check(CLI::IsMember({"atleast", "exact", "refined"}));
  count->add_flag("--json", co.json);

  TableOpts to;
  auto* table = app.add_subcommand("table", "Vertices by level and outdegree, with margins");
  table->add_option("--d", to.d)->required()->check(CLI::PositiveNumber);
  table->add_option("--n", to.n)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--source", to.source)->check(CLI::IsMember({"formula", "oracle"}));
  table->add_option("--format", to.format)->check(CLI::IsMember({"pretty", "csv", "json"}));

  MapOpts mo;
  auto* map = app.add_subcommand("map", "Apply the main bijection or its inverse");
  map->add_option("--direction", mo.direction)->check(CLI::IsMember({"forward", "inverse"}));
  map->add_option("--tree", mo.tree, "Tree, e.g. d=2;1,0,0");
  map->add_option("--vertex", mo.vertex, "Vertex address, e.g. root or 0.1/0.0");
  map->add_option("--p", mo.p, "Digit sequence, e.g. (0,1)");
  map->add_option("--path", mo.path, "Path, e.g. d=2;start=0;DDD");
  map->add_option("--n", mo.n)->check(CLI::NonNegativeNumber);
  map->add_option("--k", mo.k)->check(CLI::NonNegativeNumber);
  map->add_option("--level", mo.level)->check(CLI::NonNegativeNumber);
  map->add_flag("--json", mo.json);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites over a grid of (d, n)");
  verify->add_option("--d", vo.d, "Range a..b");
  verify->add_option("--n", vo.n, "Range a..b");
  verify->add_option("--suites", vo.suites)->delimiter(',')->check(
      CLI::IsMember({"formulas", "bijections", "sieve", "telescoping"}));
  verify->add_flag("--json", vo.json);
  verify->add_option("--jobs", vo.jobs)->check(CLI::NonNegativeNumber);

  int hd = 0, hn = 0;
  std::string hformat = "csv";
  auto* histogram = app.add_subcommand("histogram", "Brute-force vertex histogram");
  histogram->add_option("--d", hd)->required()->check(CLI::PositiveNumber);
  histogram->add_option("--n", hn)->required()->check(CLI::NonNegativeNumber);
  histogram->add_option("--format", hformat)->check(CLI::IsMember({"csv", "json"}));

  ListOpts lo;
  auto* list = app.add_subcommand("list", "Enumerate trees or paths");
  list->add_option("--d", lo.d)->required()->check(CLI::PositiveNumber);
  list->add_option("--n", lo.n)->required()->check(CLI::NonNegativeNumber);
  list->add_option("--what", lo.what)->check(CLI::IsMember({"trees", "fc", "reverse", "free"}));
  list->add_option("--k", lo.k)->check(CLI::NonNegativeNumber);
  list->add_option("--level", lo.level)->check(CLI::NonNegativeNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ResourceCap cap = resolve_cap(cap_flag);
    if (count->parsed()) return do_count(co, out);
    if (table->parsed()) return do_table(to, cap, out);
    if (map->parsed()) return do_map(mo, out);
    if (verify->parsed()) return do_verify(vo, cap, out);
    if (histogram->parsed()) {
      const auto h = vertex_histogram(hd, hn, cap);
      out << (hformat == "csv" ? histogram_csv(h) : histogram_json(h) + "\n");
      return kOk;
    }
    if (list->parsed()) return do_list(lo, cap, out);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ArithmeticIdentityError& e) {
    err << "error: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fusscat::cli
