#include "galg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <variant>
#include <vector>

#include "galg/error.hpp"

namespace galg {

FiniteGroup cyclic_group(std::size_t k) {
  if (k == 0 || k > kMaxGroupOrder) throw InputError("cyclic(k) needs 1 <= k <= " + std::to_string(kMaxGroupOrder));
  std::vector<Elem> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = i == 0 ? "e" : i == 1 ? "a" : "a^" + std::to_string(i);
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<Elem>((i + j) % k);
  }
  return FiniteGroup::from_table(k, std::move(table), std::move(names),
                                 "cyclic(" + std::to_string(k) + ")");
}

FiniteGroup dihedral_group(std::size_t k) {
  if (k == 0 || 2 * k > kMaxGroupOrder) throw InputError("dihedral(k) needs k >= 1");
  const std::size_t n = 2 * k;
  auto index = [k](bool reflect, std::size_t rot) { return static_cast<Elem>((reflect ? k : 0) + rot % k); };
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const bool xs = x >= k;
    const std::size_t xi = x % k;
    std::string rot = xi == 0 ? "" : xi == 1 ? "r" : "r^" + std::to_string(xi);
    names[x] = xs ? "s" + rot : (rot.empty() ? "e" : rot);
    for (std::size_t y = 0; y < n; ++y) {
      const bool ys = y >= k;
      const std::size_t yi = y % k;
      // s^a r^i s r^j = s^(a+1) r^(j-i)
      const std::size_t rot_part = ys ? k - xi + yi : xi + yi;
      table[x * n + y] = index(xs != ys, rot_part);
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names),
                                 "dihedral(" + std::to_string(k) + ")");
}

FiniteGroup quaternion_group() {
  // unit u in {1,i,j,k} with sign; index 2u + (negative ? 1 : 0)
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr bool unit_sign[4][4] = {
      {false, false, false, false},
      {false, true, false, true},
      {false, true, true, false},
      {false, false, true, true},
  };
  std::vector<Elem> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x / 2, uy = y / 2;
      const bool neg = ((x % 2) != 0) != ((y % 2) != 0) ? !unit_sign[ux][uy] : unit_sign[ux][uy];
      table[x * 8 + y] = static_cast<Elem>(2 * unit_product[ux][uy] + (neg ? 1 : 0));
    }
  return FiniteGroup::from_table(8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"},
                                 "quaternion8");
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> done(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ",";
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 5) throw InputError("symmetric(k) needs 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::size_t n = perms.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = cycle_notation(perms[x]);
    for (std::size_t y = 0; y < n; ++y) {
      // x first, then y
      std::vector<int> prod(k);
      for (std::size_t i = 0; i < k; ++i) prod[i] = perms[y][perms[x][i]];
      auto it = std::lower_bound(perms.begin(), perms.end(), prod);
      table[x * n + y] = static_cast<Elem>(it - perms.begin());
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names),
                                 "symmetric(" + std::to_string(k) + ")");
}

FiniteGroup unitriangular_group(std::size_t dim, std::size_t p) {
  if (dim != 3) throw InputError("unitriangular(d,p) supports d = 3 only");
  if (p != 2 && p != 3) throw InputError("unitriangular(3,p) supports p in {2, 3}");
  // [[1,a,c],[0,1,b],[0,0,1]] stored as a*p^2 + b*p + c
  const std::size_t n = p * p * p;
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    names[x] = "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      table[x * n + y] = static_cast<Elem>(ra * p * p + rb * p + rc);
    }
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names),
                                 "unitriangular(3," + std::to_string(p) + ")");
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = group();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters in group descriptor", pos_);
    return g;
  }

 private:
  using Arg = std::variant<std::size_t, FiniteGroup>;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in group descriptor", pos_);
  }

  Arg arg() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t value = 0;
      auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc()) throw ParseError("integer out of range", pos_);
      pos_ = static_cast<std::size_t>(end - text_.data());
      return value;
    }
    return group();
  }

  static std::size_t as_int(const Arg& a, std::size_t at) {
    if (auto* v = std::get_if<std::size_t>(&a)) return *v;
    throw ParseError("expected an integer argument", at);
  }

  FiniteGroup group() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) throw ParseError("expected a group builder name", start);

    std::vector<Arg> args;
    if (accept('(')) {
      do args.push_back(arg());
      while (accept(','));
      expect(')');
    }

    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw ParseError(name + " takes " + std::to_string(n) + " argument(s)", start);
    };
    if (name == "cyclic") {
      arity(1);
      return cyclic_group(as_int(args[0], start));
    }
    if (name == "dihedral") {
      arity(1);
      return dihedral_group(as_int(args[0], start));
    }
    if (name == "quaternion8") {
      arity(0);
      return quaternion_group();
    }
    if (name == "symmetric") {
      arity(1);
      return symmetric_group(as_int(args[0], start));
    }
    if (name == "unitriangular") {
      arity(2);
      return unitriangular_group(as_int(args[0], start), as_int(args[1], start));
    }
    if (name == "direct_product") {
      arity(2);
      auto* a = std::get_if<FiniteGroup>(&args[0]);
      auto* b = std::get_if<FiniteGroup>(&args[1]);
      if (!a || !b) throw ParseError("direct_product takes two group arguments", start);
      return direct_product(*a, *b);
    }
    throw ParseError("unknown group builder '" + name + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPtr build_group(std::string_view descriptor) {
  return std::make_shared<const FiniteGroup>(DescriptorParser(descriptor).parse());
}

FiniteGroup parse_table(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("table line " + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };

  if (!next_line()) throw InputError("table: empty input");
  std::istringstream header(line);
  std::string keyword;
  long long order = 0;
  if (!(header >> keyword >> order) || keyword != "order") throw fail("expected 'order N'");
  if (order <= 0 || static_cast<unsigned long long>(order) > kMaxGroupOrder)
    throw fail("order out of range");

  const auto n = static_cast<std::size_t>(order);
  std::vector<Elem> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line()) throw fail("expected " + std::to_string(n) + " table rows, got " + std::to_string(row));
    std::istringstream cells(line);
    long long v;
    std::size_t count = 0;
    while (cells >> v) {
      if (v < 0 || static_cast<unsigned long long>(v) >= n) throw fail("entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Elem>(v));
      ++count;
    }
    if (!cells.eof()) throw fail("non-integer entry");
    if (count != n) throw fail("row has " + std::to_string(count) + " entries, expected " + std::to_string(n));
  }

  std::vector<std::string> names;
  if (next_line()) {
    std::istringstream rest(line);
    rest >> keyword;
    if (keyword != "names") throw fail("expected 'names' or end of input");
    std::string name;
    while (rest >> name) names.push_back(name);
    if (names.size() != n) throw fail("names line has " + std::to_string(names.size()) + " entries");
    if (next_line()) throw fail("unexpected content after names");
  }
  return FiniteGroup::from_table(n, std::move(table), std::move(names), std::move(label));
}

FiniteGroup load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open table file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_table(buf.str(), "table(" + path.filename().string() + ")");
  } catch (const GroupAxiomError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_table(const FiniteGroup& group) {
  std::ostringstream out;
  const std::size_t n = group.order();
  out << "order " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << group.mul(static_cast<Elem>(i), static_cast<Elem>(j));
    out << '\n';
  }
  if (group.has_names()) {
    out << "names";
    for (std::size_t i = 0; i < n; ++i) out << ' ' << group.name(static_cast<Elem>(i));
    out << '\n';
  }
  return out.str();
}

}  // namespace galg
