#pragma once

// Subgroups of GL2(F3), their conjugacy classes, and the 2-dimensional
// faithful characters of Q8, SL2(F3), SD16 and GL2(F3).

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wildrep/errors.hpp"
#include "wildrep/sqrt_neg2.hpp"

namespace wildrep {

struct MatF3 {
  std::array<int, 4> e{1, 0, 0, 1};  // row major

  MatF3() = default;
  MatF3(int a, int b, int c, int d) : e{mod(a), mod(b), mod(c), mod(d)} {}

  static int mod(int x) { return ((x % 3) + 3) % 3; }
  static MatF3 identity() { return {1, 0, 0, 1}; }

  int det() const { return mod(e[0] * e[3] - e[1] * e[2]); }
  int trace() const { return mod(e[0] + e[3]); }

  friend MatF3 operator*(const MatF3& x, const MatF3& y) {
    return {x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
            x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]};
  }
  MatF3 operator-() const { return {-e[0], -e[1], -e[2], -e[3]}; }
  friend bool operator==(const MatF3&, const MatF3&) = default;
  friend auto operator<=>(const MatF3&, const MatF3&) = default;

  MatF3 inverse() const {
    const int d = det();
    require(d != 0, ErrorKind::Precondition, "singular matrix over F3");
    const int di = d;  // 1^-1 = 1, 2^-1 = 2
    return {di * e[3], -di * e[1], -di * e[2], di * e[0]};
  }

  MatF3 pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    MatF3 r = identity(), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      b = b * b;
      k >>= 1;
    }
    return r;
  }

  int order() const {
    require(det() != 0, ErrorKind::Precondition, "singular matrix has no order");
    MatF3 x = *this;
    int k = 1;
    while (!(x == identity())) {
      x = x * *this;
      ++k;
    }
    return k;
  }

  std::string to_string() const {
    return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "]]";
  }
};

/// The fixed matrices: phi = Frobenius mod 3, sigma an inertia element of
/// order 4, a = phi*sigma, tau a unipotent element of order 3.
namespace mats {
inline MatF3 phi() { return {1, 0, 0, 2}; }
inline MatF3 sigma() { return {2, 1, 1, 1}; }
inline MatF3 a() { return phi() * sigma(); }
inline MatF3 tau() { return {1, 1, 0, 1}; }
}  // namespace mats

struct NamedGenerator {
  std::string name;
  MatF3 m;
};

struct ConjugacyClass {
  std::string label;
  int order = 0;
  std::vector<MatF3> elements;  // sorted
  MatF3 representative;         // the element reached by `word`
  std::string word;             // shortest word in the generators, "1" for the identity

  std::size_t size() const { return elements.size(); }
  bool contains(const MatF3& m) const { return std::binary_search(elements.begin(), elements.end(), m); }
};

class MatrixGroupF3 {
 public:
  MatrixGroupF3() = default;

  /// Closure of the generators inside GL2(F3).
  static MatrixGroupF3 generate(std::vector<NamedGenerator> gens) {
    MatrixGroupF3 g;
    for (const auto& x : gens) require(x.m.det() != 0, ErrorKind::Precondition, "generator is not invertible mod 3");
    g.gens_ = std::move(gens);
    std::set<MatF3> seen{MatF3::identity()};
    std::vector<MatF3> frontier{MatF3::identity()};
    while (!frontier.empty()) {
      std::vector<MatF3> next;
      for (const auto& x : frontier)
        for (const auto& s : g.gens_) {
          const MatF3 y = x * s.m;
          if (seen.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
      require(seen.size() <= 48, ErrorKind::Internal, "closure larger than GL2(F3)");
    }
    g.elements_.assign(seen.begin(), seen.end());
    g.name_ = g.identify();
    return g;
  }

  static MatrixGroupF3 generate(const std::vector<MatF3>& gens) {
    std::vector<NamedGenerator> named;
    for (std::size_t i = 0; i < gens.size(); ++i) named.push_back({"g" + std::to_string(i + 1), gens[i]});
    return generate(std::move(named));
  }

  const std::vector<MatF3>& elements() const { return elements_; }
  const std::vector<NamedGenerator>& generators() const { return gens_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const MatF3& m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

  int exponent() const {
    int ex = 1;
    for (const auto& x : elements_) ex = std::lcm(ex, x.order());
    return ex;
  }

  bool is_abelian() const {
    for (const auto& x : elements_)
      for (const auto& y : elements_)
        if (!(x * y == y * x)) return false;
    return true;
  }

  int involutions() const {
    int c = 0;
    for (const auto& x : elements_) c += x.order() == 2;
    return c;
  }

  /// Conjugacy classes with labels: order, then a letter when several
  /// classes share that order. Letters go first to classes holding the
  /// anchor matrices (a, a^2, sigma, tau, -tau, in that priority), then by
  /// size and smallest element.
  std::vector<ConjugacyClass> conjugacy_classes() const {
    std::vector<ConjugacyClass> out;
    std::set<MatF3> done;
    for (const auto& x : elements_) {
      if (done.count(x)) continue;
      std::set<MatF3> cls;
      for (const auto& g : elements_) cls.insert(g * x * g.inverse());
      done.insert(cls.begin(), cls.end());
      ConjugacyClass c;
      c.order = x.order();
      c.elements.assign(cls.begin(), cls.end());
      out.push_back(std::move(c));
    }
    assign_words(out);
    const std::vector<MatF3> anchors{mats::a(), mats::a().pow(2), mats::sigma(), mats::tau(), -mats::tau()};
    auto priority = [&](const ConjugacyClass& c) {
      for (std::size_t i = 0; i < anchors.size(); ++i)
        if (c.contains(anchors[i])) return static_cast<int>(i);
      return static_cast<int>(anchors.size());
    };
    std::sort(out.begin(), out.end(), [&](const ConjugacyClass& x, const ConjugacyClass& y) {
      if (x.order != y.order) return x.order < y.order;
      const int px = priority(x), py = priority(y);
      if (px != py) return px < py;
      if (x.size() != y.size()) return x.size() < y.size();
      return x.elements.front() < y.elements.front();
    });
    std::map<int, int> per_order;
    for (const auto& c : out) ++per_order[c.order];
    std::map<int, int> used;
    for (auto& c : out) {
      c.label = std::to_string(c.order);
      if (per_order[c.order] > 1) c.label += static_cast<char>('A' + used[c.order]++);
    }
    return out;
  }

 private:
  // Shortest words by breadth-first search over the generators and their
  // inverses; each class gets its first-discovered element.
  void assign_words(std::vector<ConjugacyClass>& classes) const {
    std::vector<std::pair<std::string, MatF3>> letters;
    for (const auto& g : gens_) {
      letters.emplace_back(g.name, g.m);
      if (!(g.m.inverse() == g.m)) letters.emplace_back(g.name + "^-1", g.m.inverse());
    }
    std::map<MatF3, std::string> word{{MatF3::identity(), "1"}};
    std::vector<MatF3> order{MatF3::identity()};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const MatF3 x = order[i];
      for (const auto& [nm, m] : letters) {
        const MatF3 y = x * m;
        if (word.count(y)) continue;
        word[y] = word[x] == "1" ? nm : word[x] + " " + nm;
        order.push_back(y);
      }
    }
    for (auto& c : classes)
      for (const auto& m : order)
        if (c.contains(m)) {
          c.representative = m;
          c.word = word[m];
          break;
        }
  }

  std::string identify() const {
    const std::size_t n = elements_.size();
    if (n == 1) return "trivial";
    const bool ab = is_abelian();
    const int ex = exponent();
    if (n == 8 && !ab && ex == 4 && involutions() == 1) return "Q8";
    if (n == 24 && !ab && ex == 12 && involutions() == 1) return "SL2F3";
    if (n == 16 && !ab && ex == 8) return "SD16";
    if (n == 48) return "GL2F3";
    return "order-" + std::to_string(n);
  }

  std::vector<NamedGenerator> gens_;
  std::vector<MatF3> elements_;
  std::string name_;
};

/// The four groups from the fixed matrices. Q8 and SL2(F3) are the
/// determinant-one parts of SD16 and GL2(F3).
inline MatrixGroupF3 standard_group(const std::string& name) {
  const MatF3 phi = mats::phi(), sigma = mats::sigma(), tau = mats::tau();
  if (name == "Q8") return MatrixGroupF3::generate({{"sigma", sigma}, {"phi sigma phi", phi * sigma * phi}});
  if (name == "SL2F3") return MatrixGroupF3::generate({{"sigma", sigma}, {"tau", tau}});
  if (name == "SD16") return MatrixGroupF3::generate({{"phi", phi}, {"sigma", sigma}});
  if (name == "GL2F3") return MatrixGroupF3::generate({{"phi", phi}, {"sigma", sigma}, {"tau", tau}});
  fail(ErrorKind::Precondition, "unknown group name: " + name);
}

/// a^8 = b^2 = 1, bab = a^3 and |<a, b>| = 16.
inline bool verify_presentation_sd16(const MatF3& a, const MatF3& b) {
  if (a.det() == 0 || b.det() == 0) return false;
  const MatF3 one = MatF3::identity();
  if (!(a.pow(8) == one) || !(b.pow(2) == one) || !(b * a * b == a.pow(3))) return false;
  return MatrixGroupF3::generate({{"a", a}, {"b", b}}).size() == 16;
}

enum class Orientation { Standard, Dual };

inline std::string to_string(Orientation o) { return o == Orientation::Standard ? "standard" : "dual"; }

struct ClassEntry {
  std::string label;
  std::size_t size = 0;
  int order = 0;
  std::string word;
  MatF3 representative;
  SqrtNeg2Number value;
};

struct CharacterTable {
  std::string group;
  std::size_t group_order = 0;
  Orientation orientation = Orientation::Standard;
  std::vector<ClassEntry> classes;

  const ClassEntry& at(const std::string& label) const {
    for (const auto& c : classes)
      if (c.label == label) return c;
    fail(ErrorKind::Precondition, "no class " + label + " in the table of " + group);
  }
  ClassEntry& at(const std::string& label) {
    return const_cast<ClassEntry&>(static_cast<const CharacterTable&>(*this).at(label));
  }
  bool has(const std::string& label) const {
    for (const auto& c : classes)
      if (c.label == label) return true;
    return false;
  }
  SqrtNeg2Number degree() const { return classes.front().value; }
};

namespace detail {

struct TableRow {
  const char* label;
  std::size_t size;
  long a;
  long b;  // value a + b sqrt(-2)
};

inline const std::vector<TableRow>& table_rows(const std::string& name) {
  static const std::vector<TableRow> q8{{"1", 1, 2, 0}, {"2", 1, -2, 0}, {"4A", 2, 0, 0}, {"4B", 2, 0, 0}, {"4C", 2, 0, 0}};
  static const std::vector<TableRow> sl{{"1", 1, 2, 0},  {"2", 1, -2, 0}, {"3A", 4, -1, 0}, {"3B", 4, -1, 0},
                                        {"4", 6, 0, 0},  {"6A", 4, 1, 0}, {"6B", 4, 1, 0}};
  static const std::vector<TableRow> sd{{"1", 1, 2, 0},  {"2A", 1, -2, 0}, {"2B", 4, 0, 0}, {"4A", 2, 0, 0},
                                        {"4B", 4, 0, 0}, {"8A", 2, 0, 1},  {"8B", 2, 0, -1}};
  static const std::vector<TableRow> gl{{"1", 1, 2, 0}, {"2A", 1, -2, 0}, {"2B", 12, 0, 0}, {"3", 8, -1, 0},
                                        {"4", 6, 0, 0}, {"6", 8, 1, 0},   {"8A", 6, 0, 1},  {"8B", 6, 0, -1}};
  if (name == "Q8") return q8;
  if (name == "SL2F3") return sl;
  if (name == "SD16") return sd;
  if (name == "GL2F3") return gl;
  fail(ErrorKind::Precondition, "unknown group name: " + name);
}

inline CharacterTable swap_order_eight(CharacterTable t) {
  if (t.has("8A") && t.has("8B")) std::swap(t.at("8A").value, t.at("8B").value);
  return t;
}

}  // namespace detail

/// The faithful 2-dimensional character psi. Orientation only matters for
/// SD16 and GL2(F3), where Dual swaps the values on 8A and 8B.
inline CharacterTable psi_table(const std::string& name, Orientation orientation = Orientation::Standard) {
  const auto& rows = detail::table_rows(name);
  const MatrixGroupF3 g = standard_group(name);
  require(g.name() == name, ErrorKind::Internal, "standard generators do not give " + name);
  const auto classes = g.conjugacy_classes();
  require(classes.size() == rows.size(), ErrorKind::Internal, "class count of " + name + " differs from the table");
  CharacterTable t;
  t.group = name;
  t.group_order = g.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = classes[i];
    require(c.label == rows[i].label && c.size() == rows[i].size, ErrorKind::Internal,
            "class " + c.label + " of " + name + " does not match the table");
    t.classes.push_back({c.label, c.size(), c.order, c.word, c.representative, SqrtNeg2Number(rows[i].a, rows[i].b)});
  }
  const bool oriented = name == "SD16" || name == "GL2F3";
  if (oriented && orientation == Orientation::Dual) t = detail::swap_order_eight(std::move(t));
  t.orientation = oriented ? orientation : Orientation::Standard;
  return t;
}

/// <psi, psi> = 1 and <psi, 1> = 0.
inline bool check_orthogonality(const CharacterTable& t) {
  SqrtNeg2Number s, s1;
  std::size_t total = 0;
  for (const auto& c : t.classes) {
    const SqrtNeg2Number size(static_cast<long>(c.size));
    s = s + size * c.value * c.value.conj();
    s1 = s1 + size * c.value;
    total += c.size;
  }
  return total == t.group_order && s == SqrtNeg2Number(static_cast<long>(t.group_order)) &&
         s1 == SqrtNeg2Number();
}

/// Trivial kernel: only the identity class takes the value psi(1).
inline bool is_faithful(const CharacterTable& t) {
  for (std::size_t i = 1; i < t.classes.size(); ++i)
    if (t.classes[i].value == t.degree()) return false;
  return true;
}

/// Restriction of psi from SD16 (resp. GL2(F3)) to the determinant-one
/// subgroup Q8 (resp. SL2(F3)), matched class by class through matrices.
inline CharacterTable restrict_to_inertia(const CharacterTable& t) {
  require(t.group == "SD16" || t.group == "GL2F3", ErrorKind::Precondition,
          "restriction to inertia needs SD16 or GL2F3, got " + t.group);
  const std::string sub = t.group == "SD16" ? "Q8" : "SL2F3";
  const MatrixGroupF3 full = standard_group(t.group);
  const MatrixGroupF3 h = standard_group(sub);
  for (const auto& x : h.elements())
    require(full.contains(x), ErrorKind::Internal, "inertia subgroup is not contained in " + t.group);
  const auto full_classes = full.conjugacy_classes();
  CharacterTable r;
  r.group = sub;
  r.group_order = h.size();
  for (const auto& c : h.conjugacy_classes()) {
    const ClassEntry* src = nullptr;
    for (const auto& fc : full_classes)
      if (fc.contains(c.representative)) src = &t.at(fc.label);
    require(src != nullptr, ErrorKind::Internal, "inertia class not found in " + t.group);
    r.classes.push_back({c.label, c.size(), c.order, c.word, c.representative, src->value});
  }
  return r;
}

inline bool same_values(const CharacterTable& x, const CharacterTable& y) {
  if (x.group != y.group || x.classes.size() != y.classes.size()) return false;
  for (std::size_t i = 0; i < x.classes.size(); ++i)
    if (x.classes[i].label != y.classes[i].label || x.classes[i].size != y.classes[i].size ||
        !(x.classes[i].value == y.classes[i].value))
      return false;
  return true;
}

}  // namespace wildrep
