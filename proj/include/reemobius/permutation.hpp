#pragma once

// Permutations of {0, ..., d-1} and finite permutation groups held as an
// explicit element list with a full multiplication table.

#include <cstdint>
#include <deque>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reemobius::oracle {

class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() : images_{0} {}

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    if (images_.empty()) {
      throw std::invalid_argument("Permutation: degree must be at least 1");
    }
    std::vector<bool> hit(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || hit[p]) {
        throw std::invalid_argument("Permutation: images are not a bijection");
      }
      hit[p] = true;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    return Permutation(std::move(im));
  }

  /// Builds from 0-based cycles on `degree` points.
  static Permutation from_cycles(const std::vector<std::vector<unsigned>>& cycles,
                                 std::size_t degree) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const unsigned from = cycle[i];
        if (from >= degree || used[from]) {
          throw std::invalid_argument("Permutation: bad or repeated point " +
                                      std::to_string(from));
        }
        used[from] = true;
        im[from] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
      }
    }
    return Permutation(std::move(im));
  }

  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)"; "()" is the
  /// identity. Points may be separated by spaces or commas. A degree of 0
  /// means "largest point mentioned".
  static Permutation parse(std::string_view text, std::size_t degree = 0) {
    std::vector<std::vector<unsigned>> cycles;
    std::size_t largest = 0;
    std::size_t i = 0;
    auto skip_space = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' ||
                                 text[i] == ',' || text[i] == '\r')) {
        ++i;
      }
    };
    skip_space();
    while (i < text.size()) {
      if (text[i] != '(') {
        throw std::invalid_argument("Permutation: expected '(' in \"" +
                                    std::string(text) + "\"");
      }
      ++i;
      std::vector<unsigned> cycle;
      for (;;) {
        skip_space();
        if (i >= text.size()) {
          throw std::invalid_argument("Permutation: unterminated cycle");
        }
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t value = 0;
        const std::size_t begin = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + static_cast<std::size_t>(text[i] - '0');
          if (value > std::numeric_limits<Point>::max()) {
            throw std::invalid_argument("Permutation: point too large");
          }
          ++i;
        }
        if (i == begin || value == 0) {
          throw std::invalid_argument("Permutation: points are 1-based integers");
        }
        largest = std::max(largest, value);
        cycle.push_back(static_cast<unsigned>(value - 1));
      }
      if (!cycle.empty()) {
        cycles.push_back(std::move(cycle));
      }
      skip_space();
    }
    if (degree == 0) {
      degree = std::max<std::size_t>(largest, 1);
    } else if (largest > degree) {
      throw std::invalid_argument("Permutation: point exceeds degree");
    }
    return from_cycles(cycles, degree);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_.at(p); }
  const std::vector<Point>& images() const noexcept { return images_; }

  /// Same permutation on a larger point set.
  Permutation extended(std::size_t degree) const {
    if (degree < images_.size()) {
      throw std::invalid_argument("Permutation: cannot shrink degree");
    }
    std::vector<Point> im = images_;
    for (std::size_t p = images_.size(); p < degree; ++p) {
      im.push_back(static_cast<Point>(p));
    }
    return Permutation(std::move(im));
  }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
      throw std::invalid_argument("Permutation: degree mismatch");
    }
    std::vector<Point> im(a.degree());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[x] = a.images_[b.images_[x]];
    }
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  Permutation inverse() const {
    std::vector<Point> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[images_[x]] = static_cast<Point>(x);
    }
    Permutation r;
    r.images_ = std::move(im);
    return r;
  }

  bool is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x) {
      if (images_[x] != x) return false;
    }
    return true;
  }

  /// 1-based cycle notation, "()" for the identity.
  std::string str() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += "(";
      std::size_t x = start;
      bool first = true;
      while (!seen[x]) {
        seen[x] = true;
        if (!first) out += " ";
        out += std::to_string(x + 1);
        first = false;
        x = images_[x];
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images()) {
      h = (h ^ v) * 1099511628211ULL;
    }
    return h;
  }
};

/// A finite permutation group with indexed elements. Element 0 is the
/// identity; mul(i, j) is the index of elements[i] * elements[j].
class FiniteGroup {
 public:
  /// Breadth-first closure of the generators. Throws std::length_error when
  /// the group would exceed `limit` elements.
  static FiniteGroup closure(std::vector<Permutation> generators,
                             std::size_t limit =
                                 std::numeric_limits<std::uint32_t>::max()) {
    if (generators.empty()) {
      throw std::invalid_argument("closure: need at least one generator");
    }
    const std::size_t degree = generators.front().degree();
    for (const auto& g : generators) {
      if (g.degree() != degree) {
        throw std::invalid_argument("closure: generators differ in degree");
      }
    }
    FiniteGroup G;
    G.degree_ = degree;
    G.generators_ = generators;
    G.add(Permutation::identity(degree));
    for (std::size_t next = 0; next < G.elements_.size(); ++next) {
      for (const auto& g : generators) {
        const Permutation p = g * G.elements_[next];
        if (!G.index_.contains(p)) {
          if (G.elements_.size() >= limit) {
            throw std::length_error("closure: group order exceeds bound " +
                                    std::to_string(limit));
          }
          G.add(p);
        }
      }
    }
    G.build_tables();
    return G;
  }

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept {
    return generators_;
  }
  const Permutation& element(std::size_t i) const { return elements_.at(i); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  unsigned element_order(std::uint32_t a) const { return orders_[a]; }

  std::uint32_t index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
      throw std::invalid_argument("FiniteGroup: permutation not in group");
    }
    return it->second;
  }

 private:
  void add(Permutation p) {
    index_.emplace(p, static_cast<std::uint32_t>(elements_.size()));
    elements_.push_back(std::move(p));
  }

  void build_tables() {
    const std::size_t N = elements_.size();
    table_.assign(N * N, 0);
    inverse_.assign(N, 0);
    orders_.assign(N, 0);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        table_[a * N + b] = index_.at(elements_[a] * elements_[b]);
      }
    }
    for (std::uint32_t a = 0; a < N; ++a) {
      unsigned k = 1;
      std::uint32_t x = a;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      orders_[a] = k;
      // a^(k-1) is the inverse
      std::uint32_t y = 0;
      for (unsigned i = 1; i < k; ++i) y = mul(y, a);
      inverse_[a] = y;
    }
  }

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<unsigned> orders_;
};

/// Reads a group file: one permutation per line in 1-based cycle notation,
/// "#" comments and blank lines ignored. All permutations are brought to the
/// largest degree mentioned.
inline std::vector<Permutation> parse_group_text(std::istream& in) {
  std::vector<Permutation> perms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      perms.push_back(Permutation::parse(std::string_view(line).substr(first)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  if (perms.empty()) {
    throw std::invalid_argument("group file contains no permutations");
  }
  std::size_t degree = 1;
  for (const auto& p : perms) degree = std::max(degree, p.degree());
  for (auto& p : perms) p = p.extended(degree);
  return perms;
}

inline std::vector<Permutation> parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open group file " + path);
  }
  return parse_group_text(in);
}

}  // namespace reemobius::oracle
