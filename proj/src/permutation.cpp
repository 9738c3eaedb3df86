#include "permcm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "permcm/errors.hpp"

namespace permcm {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree)
    throw InputError("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InputError("image sequence is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree)
    throw InputError("permutation degree exceeds " + std::to_string(kMaxDegree));
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation g;
  g.images_ = std::move(images);
  return g;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (Point p : g.images()) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InputError("cannot compose permutations of degrees " +
                     std::to_string(a.degree()) + " and " +
                     std::to_string(b.degree()));
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a(b(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& g) {
  std::vector<Point> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[g(static_cast<Point>(i))] = static_cast<Point>(i);
  return Permutation(std::move(images));
}

Permutation power(const Permutation& g, std::uint64_t k) {
  Permutation result = Permutation::identity(g.degree());
  Permutation base = g;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> cycles(const Permutation& g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (done[start]) continue;
    std::vector<Point> cycle;
    Point p = static_cast<Point>(start);
    while (!done[p]) {
      done[p] = true;
      cycle.push_back(p);
      p = g(p);
    }
    if (cycle.size() > 1) out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& g) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(g)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t element_order(const Permutation& g) {
  std::uint64_t order = 1;
  for (std::size_t len : cycle_type(g)) order = std::lcm(order, std::uint64_t{len});
  return order;
}

namespace {

bool is_separator(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == ',';
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw InputError("degree must be in [1, " + std::to_string(kMaxDegree) + "]");

  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty() || compact == "()") return Permutation::identity(degree);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto use_point = [&](unsigned long value) -> Point {
    if (value < 1 || value > degree)
      throw InputError("point " + std::to_string(value) + " out of range [1," +
                       std::to_string(degree) + "]");
    Point p = static_cast<Point>(value - 1);
    if (used[p])
      throw InputError("point " + std::to_string(value) + " repeated in \"" +
                       std::string(text) + "\"");
    used[p] = true;
    return p;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ')') throw InputError("unbalanced ')' in \"" + std::string(text) + "\"");
    if (c != '(')
      throw InputError(std::string("unexpected character '") + c + "' in \"" +
                       std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    bool closed = false;
    while (i < text.size()) {
      char d = text[i];
      if (d == ')') {
        closed = true;
        ++i;
        break;
      }
      if (d == '(') throw InputError("nested '(' in \"" + std::string(text) + "\"");
      if (is_separator(d)) {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(d)))
        throw InputError(std::string("unexpected character '") + d + "' in \"" +
                         std::string(text) + "\"");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string_view token = text.substr(i, j - i);
      if (token.size() > 1 && degree <= 9) {
        for (char digit : token) cycle.push_back(use_point(digit - '0'));
      } else {
        if (token.size() > 3)
          throw InputError("point " + std::string(token) + " out of range");
        cycle.push_back(use_point(std::stoul(std::string(token))));
      }
      i = j;
    }
    if (!closed) throw InputError("unbalanced '(' in \"" + std::string(text) + "\"");
    if (cycle.empty()) throw InputError("empty cycle in \"" + std::string(text) + "\"");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

std::vector<std::string> split_generators(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    bool blank = std::all_of(current.begin(), current.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (!blank) out.push_back(current);
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth <= 0 && (c == ',' || c == '\n' || c == ';')) {
      flush();
      continue;
    }
    current.push_back(c);
  }
  flush();
  return out;
}

std::string to_cycle_string(const Permutation& g) {
  auto cs = cycles(g);
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << static_cast<unsigned>(c[k]) + 1;
    }
    os << ')';
  }
  return os.str();
}

}  // namespace permcm
