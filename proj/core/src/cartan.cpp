#include "cellcrystal/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

#include "cellcrystal/errors.hpp"

namespace cellcrystal {

namespace {

bool rank_valid(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

void link(IntMatrix& m, int i, int j, std::int64_t aij = -1, std::int64_t aji = -1) {
  m(i - 1, j - 1) = aij;
  m(j - 1, i - 1) = aji;
}

IntMatrix build_cartan(LieType t) {
  const int n = t.rank;
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      link(m, n - 1, n, -1, -2);  // α_n short
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      link(m, n - 1, n, -2, -1);  // α_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(m, i, i + 1);
      link(m, n - 2, n);
      break;
    case Family::E:
      link(m, 1, 3);
      link(m, 2, 4);
      for (int i = 3; i < n; ++i) link(m, i, i + 1);
      break;
    case Family::F:
      link(m, 1, 2);
      link(m, 2, 3, -1, -2);
      link(m, 3, 4);
      break;
    case Family::G:
      link(m, 1, 2, -1, -3);
      break;
  }
  return m;
}

// Solve d_i a_ij = d_j a_ji over the (connected) Dynkin graph, then clear
// denominators.
std::vector<std::int64_t> build_symmetrizer(const IntMatrix& a) {
  const int n = a.rows();
  std::vector<std::int64_t> num(static_cast<std::size_t>(n), 0), den(static_cast<std::size_t>(n), 1);
  num[0] = 1;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (seen[static_cast<std::size_t>(j)] || a(i, j) == 0) continue;
      // d_j = d_i * a_ij / a_ji
      std::int64_t p = num[static_cast<std::size_t>(i)] * a(i, j);
      std::int64_t r = den[static_cast<std::size_t>(i)] * a(j, i);
      if (r < 0) { p = -p; r = -r; }
      const std::int64_t g = std::gcd(p, r);
      num[static_cast<std::size_t>(j)] = p / g;
      den[static_cast<std::size_t>(j)] = r / g;
      seen[static_cast<std::size_t>(j)] = true;
      q.push(j);
    }
  }
  std::int64_t l = 1;
  for (auto d : den) l = std::lcm(l, d);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  std::int64_t g = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = num[i] * (l / den[i]);
    g = std::gcd(g, d[i]);
  }
  for (auto& v : d) v /= g;
  return d;
}

}  // namespace

LieType LieType::make(Family family, int rank) {
  if (!rank_valid(family, rank)) {
    throw DomainError("invalid rank " + std::to_string(rank) + " for type " +
                      std::string(1, static_cast<char>(family)));
  }
  return LieType{family, rank};
}

LieType LieType::parse(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  if (trimmed.size() < 2) throw DomainError("cannot parse Lie type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(trimmed.front())));
  if (f < 'A' || f > 'G') throw DomainError("unknown Lie family in '" + std::string(text) + "'");
  int rank = 0;
  auto digits = trimmed.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("cannot parse rank in '" + std::string(text) + "'");
  }
  return make(static_cast<Family>(f), rank);
}

std::string LieType::to_string() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int LieType::positive_root_count() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  data_.reserve(static_cast<std::size_t>(rows_ * cols_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
    }
  return out;
}

std::vector<std::int64_t> IntMatrix::operator*(std::span<const std::int64_t> v) const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

Weight Weight::fundamental(int rank, int i) {
  Weight w = zero(rank);
  w.coeffs_.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.rank() != rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rhs.rank() != rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Weight operator-(Weight w) {
  for (auto& c : w.coeffs_) c = -c;
  return w;
}

Weight operator*(std::int64_t s, Weight w) {
  for (auto& c : w.coeffs_) c *= s;
  return w;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

CartanData::CartanData(LieType type)
    : type_(LieType::make(type.family, type.rank)), cartan_(build_cartan(type_)), sym_(build_symmetrizer(cartan_)) {}

void CartanData::check_index(int i) const {
  if (i < 1 || i > rank()) {
    throw DomainError("index " + std::to_string(i) + " out of range for " + type_.to_string());
  }
}

Weight CartanData::alpha(int i) const {
  check_index(i);
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank()));
  for (int j = 1; j <= rank(); ++j) c[static_cast<std::size_t>(j - 1)] = a(j, i);
  return Weight(std::move(c));
}

Weight CartanData::rho() const {
  return Weight(std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 1));
}

Weight CartanData::reflect(int i, const Weight& lambda) const {
  check_index(i);
  const auto p = lambda.pairing(i);
  return lambda - p * alpha(i);
}

WeylElement CartanData::reflection(int i) const {
  check_index(i);
  // Column j is s_i(Λ_j) = Λ_j - δ_ij α_i.
  IntMatrix m = IntMatrix::identity(rank());
  for (int r = 1; r <= rank(); ++r) m(r - 1, i - 1) -= a(r, i);
  return WeylElement(std::move(m));
}

WeylElement CartanData::element(std::span<const int> letters) const {
  WeylElement w = WeylElement::identity(rank());
  for (int i : letters) w = w * reflection(i);
  return w;
}

Weight CartanData::weyl_apply(std::span<const int> letters, Weight lambda) const {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) lambda = reflect(*it, lambda);
  return lambda;
}

std::vector<int> CartanData::longest_word() const {
  // i is a left descent of w iff ⟨h_i, wρ⟩ < 0; start from w_0ρ = -ρ.
  std::vector<int> word;
  Weight mu = -rho();
  for (;;) {
    int next = 0;
    for (int i = 1; i <= rank(); ++i) {
      if (mu.pairing(i) < 0) {
        next = i;
        break;
      }
    }
    if (next == 0) break;
    word.push_back(next);
    mu = reflect(next, mu);
  }
  return word;
}

WeylElement CartanData::longest_element() const {
  const auto w = longest_word();
  return element(w);
}

int CartanData::i_star(int i) const {
  check_index(i);
  const Weight image = -weyl_apply(longest_word(), Weight::fundamental(rank(), i));
  for (int j = 1; j <= rank(); ++j) {
    if (image == Weight::fundamental(rank(), j)) return j;
  }
  throw ModelViolation("-w_0 Λ_" + std::to_string(i) + " is not a fundamental weight");
}

CartanPtr cartan_data(LieType type) { return std::make_shared<const CartanData>(type); }

}  // namespace cellcrystal
