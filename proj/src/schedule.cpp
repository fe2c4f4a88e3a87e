#include "nestsep/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nestsep {

namespace {

using Mat = std::vector<std::int64_t>;  // flattened n x n

Mat identity_mat(int n) {
  Mat m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n, std::int64_t mod = 0) {
  Mat r(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::int64_t aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& cell = r[static_cast<std::size_t>(i) * n + j];
        cell += aik * b[static_cast<std::size_t>(k) * n + j];
        if (mod) cell %= mod;
      }
    }
  if (mod)
    for (auto& v : r) v = ((v % mod) + mod) % mod;
  return r;
}

std::vector<std::int64_t> mat_apply(const Mat& a, const std::vector<std::int64_t>& v, int n,
                                    std::int64_t mod = 0) {
  std::vector<std::int64_t> r(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r[i] += a[static_cast<std::size_t>(i) * n + j] * v[j];
    if (mod) r[i] = ((r[i] % mod) + mod) % mod;
  }
  return r;
}

std::int64_t mat_det(const Mat& a, int n) {
  if (n == 1) return a[0];
  std::int64_t det = 0;
  for (int c = 0; c < n; ++c) {
    Mat minor;
    minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor.push_back(a[static_cast<std::size_t>(i) * n + j]);
    std::int64_t term = a[c] * mat_det(minor, n - 1);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Integer inverse of a unimodular matrix via the adjugate.
Mat mat_inverse_unimodular(const Mat& a, int n, std::int64_t det) {
  Mat inv(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat minor;
      minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0; c < n; ++c)
          if (c != i) minor.push_back(a[static_cast<std::size_t>(r) * n + c]);
      }
      std::int64_t cof = n == 1 ? 1 : mat_det(minor, n - 1);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[static_cast<std::size_t>(i) * n + j] = det * cof;  // det is +-1
    }
  return inv;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string trim(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  if (s.empty()) fail("InvalidInput", "expected an integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    fail("InvalidInput", "not an integer: '" + s + "'");
  }
  if (pos != s.size()) fail("InvalidInput", "trailing characters in integer: '" + s + "'");
  return v;
}

std::string strip_parens(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail("InvalidInput", "expected a parenthesised tuple, got '" + s + "'");
  return s.substr(1, s.size() - 2);
}

}  // namespace

ModularPowers matrix_powers_mod(const std::vector<std::vector<std::int64_t>>& a, std::int64_t m) {
  const int n = static_cast<int>(a.size());
  Mat base;
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n) fail("InvalidArgs", "matrix is not square");
    for (auto v : row) base.push_back(((v % m) + m) % m);
  }
  ModularPowers out;
  out.modulus = m;
  Mat id = identity_mat(n);
  Mat cur = id;
  for (std::int64_t e = 0;; ++e) {
    if (e > 0 && cur == id) {
      out.order = e;
      return out;
    }
    if (e > 4000000) fail("InvalidArgs", "matrix order mod m did not terminate");
    out.powers.push_back(cur);
    cur = mat_mul(cur, base, n, m);
  }
}

// --- stage backends --------------------------------------------------------

namespace {

class TableStage final : public StageGroup {
 public:
  explicit TableStage(GroupRef g) : g_(std::move(g)) {}
  std::uint64_t order() const override { return static_cast<std::uint64_t>(g_->order()); }
  Code identity() const override { return 0; }
  Code mul(Code a, Code b) const override {
    return static_cast<Code>(g_->mul(static_cast<int>(a), static_cast<int>(b)));
  }
  Code inv(Code a) const override { return static_cast<Code>(g_->inv(static_cast<int>(a))); }
  std::string describe() const override {
    return "table group of order " + std::to_string(g_->order());
  }

 private:
  GroupRef g_;
};

// (Z/m)^n x| C_e with the action of the k-th generator power given by the
// k-th entry of `powers`. Codes are mixed radix: v_0 + m v_1 + ... + m^n k.
class CongruenceStage final : public StageGroup {
 public:
  CongruenceStage(int n, std::int64_t m, std::vector<Mat> powers, std::string description)
      : n_(n), m_(m), e_(static_cast<std::int64_t>(powers.size())), powers_(std::move(powers)),
        description_(std::move(description)) {
    order_ = 1;
    for (int i = 0; i < n_; ++i) order_ *= static_cast<std::uint64_t>(m_);
    order_ *= static_cast<std::uint64_t>(e_);
  }

  std::uint64_t order() const override { return order_; }
  Code identity() const override { return 0; }

  Code mul(Code a, Code b) const override {
    auto [va, ka] = decode(a);
    auto [vb, kb] = decode(b);
    auto v = mat_apply(powers_[static_cast<std::size_t>(ka)], vb, n_, m_);
    for (int i = 0; i < n_; ++i) v[i] = (v[i] + va[i]) % m_;
    return encode(v, (ka + kb) % e_);
  }

  Code inv(Code a) const override {
    auto [va, ka] = decode(a);
    std::int64_t kinv = (e_ - ka) % e_;
    auto v = mat_apply(powers_[static_cast<std::size_t>(kinv)], va, n_, m_);
    for (int i = 0; i < n_; ++i) v[i] = (m_ - v[i]) % m_;
    return encode(v, kinv);
  }

  std::string describe() const override { return description_; }

  Code encode(const std::vector<std::int64_t>& v, std::int64_t k) const {
    Code c = static_cast<Code>(k);
    for (int i = n_ - 1; i >= 0; --i) c = c * static_cast<Code>(m_) + static_cast<Code>(v[i]);
    return c;
  }

 private:
  std::pair<std::vector<std::int64_t>, std::int64_t> decode(Code c) const {
    std::vector<std::int64_t> v(n_);
    for (int i = 0; i < n_; ++i) {
      v[i] = static_cast<std::int64_t>(c % static_cast<Code>(m_));
      c /= static_cast<Code>(m_);
    }
    return {v, static_cast<std::int64_t>(c)};
  }

  int n_;
  std::int64_t m_, e_;
  std::uint64_t order_;
  std::vector<Mat> powers_;
  std::string description_;
};

class ProductStage final : public StageGroup {
 public:
  ProductStage(StageRef a, StageRef b) : a_(std::move(a)), b_(std::move(b)) {
    if (b_->order() != 0 && a_->order() > UINT64_MAX / b_->order())
      fail("InvalidArgs", "product stage order overflows");
  }
  std::uint64_t order() const override { return a_->order() * b_->order(); }
  Code identity() const override { return 0; }
  Code mul(Code x, Code y) const override {
    Code bo = b_->order();
    return a_->mul(x / bo, y / bo) * bo + b_->mul(x % bo, y % bo);
  }
  Code inv(Code x) const override {
    Code bo = b_->order();
    return a_->inv(x / bo) * bo + b_->inv(x % bo);
  }
  std::string describe() const override { return a_->describe() + " x " + b_->describe(); }

 private:
  StageRef a_, b_;
};

}  // namespace

// --- base class services ----------------------------------------------------

StageRef ScheduledGroup::stage(std::size_t index) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = stage_cache_.find(index);
    if (it != stage_cache_.end()) return it->second;
  }
  auto built = build_stage(index);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    stage_cache_.emplace(index, built);
  }
  check_stage_homomorphy(*this, index);
  return built;
}

std::vector<Code> ScheduledGroup::stage_generator_codes(std::size_t index) const {
  std::vector<Code> out;
  for (const auto& g : generators()) out.push_back(project(index, g));
  return out;
}

void check_stage_homomorphy(const ScheduledGroup& sg, std::size_t index, int pairs) {
  auto st = sg.stage(index);
  std::mt19937_64 rng(fnv1a(sg.name()) ^ (0x9e3779b97f4a7c15ull * (index + 1)));
  for (int t = 0; t < pairs; ++t) {
    Word a = sg.sample_word(rng), b = sg.sample_word(rng);
    Code lhs = sg.project(index, sg.mul(a, b));
    Code rhs = st->mul(sg.project(index, a), sg.project(index, b));
    if (lhs != rhs)
      fail("InvalidArgs", "stage projection is not multiplicative at " + sg.name() +
                              " stage " + std::to_string(index) + " on " + sg.format(a) + ", " +
                              sg.format(b));
  }
}

// --- Z ----------------------------------------------------------------------

namespace {

class IntegerSchedule final : public ScheduledGroup {
 public:
  std::string name() const override { return "integers"; }
  std::size_t word_size() const override { return 1; }
  Word identity() const override { return {0}; }
  Word mul(const Word& a, const Word& b) const override { return {a[0] + b[0]}; }
  Word inv(const Word& a) const override { return {-a[0]}; }
  std::vector<Word> generators() const override { return {{1}}; }
  Word sample_word(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::int64_t> pick(-50, 50);
    return {pick(rng)};
  }
  std::size_t stage_count() const override { return SIZE_MAX; }
  Code project(std::size_t index, const Word& w) const override {
    std::int64_t m = modulus(index);
    return static_cast<Code>(((w[0] % m) + m) % m);
  }
  std::string stage_params(std::size_t index) const override {
    return "m=" + std::to_string(modulus(index));
  }
  std::string format(const Word& w) const override { return std::to_string(w[0]); }
  Word parse(const std::string& text) const override { return {parse_int(trim(text))}; }

 protected:
  StageRef build_stage(std::size_t index) const override {
    std::int64_t m = modulus(index);
    return std::make_shared<CongruenceStage>(1, m, std::vector<Mat>{identity_mat(1)},
                                             "Z/" + std::to_string(m));
  }

 private:
  static std::int64_t modulus(std::size_t index) { return static_cast<std::int64_t>(index) + 2; }
};

// --- Z^n x| Z ----------------------------------------------------------------

class LatticeSchedule final : public ScheduledGroup {
 public:
  explicit LatticeSchedule(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    n_ = static_cast<int>(rows_.size());
    if (n_ == 0) fail("InvalidArgs", "matrix must be nonempty");
    for (const auto& row : rows_) {
      if (static_cast<int>(row.size()) != n_) fail("InvalidArgs", "matrix is not square");
      for (auto v : row) a_.push_back(v);
    }
    std::int64_t det = mat_det(a_, n_);
    if (det != 1 && det != -1)
      fail("NotUnimodular", "det = " + std::to_string(det) + ", need +-1");
    a_inv_ = mat_inverse_unimodular(a_, n_, det);

    std::ostringstream name;
    name << "lattice[";
    for (int i = 0; i < n_; ++i) {
      name << (i ? ",[" : "[");
      for (int j = 0; j < n_; ++j) name << (j ? "," : "") << rows_[i][j];
      name << "]";
    }
    name << "]";
    name_ = name.str();
  }

  std::string name() const override { return name_; }
  std::size_t word_size() const override { return static_cast<std::size_t>(n_) + 1; }
  Word identity() const override { return Word(word_size(), 0); }

  Word mul(const Word& a, const Word& b) const override {
    std::vector<std::int64_t> v2(b.begin(), b.end() - 1);
    auto moved = act(a.back(), v2);
    Word out;
    for (int i = 0; i < n_; ++i) out.push_back(a[i] + moved[i]);
    out.push_back(a.back() + b.back());
    return out;
  }

  Word inv(const Word& a) const override {
    std::vector<std::int64_t> v(a.begin(), a.end() - 1);
    auto moved = act(-a.back(), v);
    Word out;
    for (int i = 0; i < n_; ++i) out.push_back(-moved[i]);
    out.push_back(-a.back());
    return out;
  }

  std::vector<Word> generators() const override {
    std::vector<Word> gens;
    for (int i = 0; i < n_; ++i) {
      Word w(word_size(), 0);
      w[i] = 1;
      gens.push_back(std::move(w));
    }
    Word t(word_size(), 0);
    t.back() = 1;
    gens.push_back(std::move(t));
    return gens;
  }

  Word sample_word(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::int64_t> coord(-3, 3), twist(-2, 2);
    Word w;
    for (int i = 0; i < n_; ++i) w.push_back(coord(rng));
    w.push_back(twist(rng));
    return w;
  }

  std::size_t stage_count() const override { return SIZE_MAX; }

  Code project(std::size_t index, const Word& w) const override {
    std::int64_t m = modulus(index);
    const auto& mp = powers_for(m);
    std::vector<std::int64_t> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = ((w[i] % m) + m) % m;
    std::int64_t k = ((w.back() % mp.order) + mp.order) % mp.order;
    Code c = static_cast<Code>(k);
    for (int i = n_ - 1; i >= 0; --i) c = c * static_cast<Code>(m) + static_cast<Code>(v[i]);
    return c;
  }

  std::string stage_params(std::size_t index) const override {
    std::int64_t m = modulus(index);
    return "m=" + std::to_string(m) + ",e=" + std::to_string(powers_for(m).order);
  }

  std::string format(const Word& w) const override {
    std::ostringstream out;
    out << "((";
    for (int i = 0; i < n_; ++i) out << (i ? "," : "") << w[i];
    out << ")," << w.back() << ")";
    return out.str();
  }

  Word parse(const std::string& text) const override {
    auto parts = split_top_level(strip_parens(trim(text)));
    if (parts.size() != 2) fail("InvalidInput", "expected ((v...),k)");
    auto coords = split_top_level(strip_parens(parts[0]));
    if (static_cast<int>(coords.size()) != n_)
      fail("InvalidInput", "expected " + std::to_string(n_) + " lattice coordinates");
    Word w;
    for (const auto& c : coords) w.push_back(parse_int(c));
    w.push_back(parse_int(parts[1]));
    return w;
  }

 protected:
  StageRef build_stage(std::size_t index) const override {
    std::int64_t m = modulus(index);
    const auto& mp = powers_for(m);
    return std::make_shared<CongruenceStage>(
        n_, m, mp.powers,
        "(Z/" + std::to_string(m) + ")^" + std::to_string(n_) + " x| C_" +
            std::to_string(mp.order));
  }

 private:
  static std::int64_t modulus(std::size_t index) { return static_cast<std::int64_t>(index) + 2; }

  // A^k v over the integers, k of either sign
  std::vector<std::int64_t> act(std::int64_t k, std::vector<std::int64_t> v) const {
    const Mat& step = k >= 0 ? a_ : a_inv_;
    for (std::int64_t i = 0, reps = k >= 0 ? k : -k; i < reps; ++i) v = mat_apply(step, v, n_);
    return v;
  }

  const ModularPowers& powers_for(std::int64_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = powers_cache_.find(m);
    if (it == powers_cache_.end())
      it = powers_cache_.emplace(m, matrix_powers_mod(rows_, m)).first;
    return it->second;
  }

  std::vector<std::vector<std::int64_t>> rows_;
  int n_ = 0;
  Mat a_, a_inv_;
  std::string name_;
  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, ModularPowers> powers_cache_;
};

// --- BS(1,2) -----------------------------------------------------------------

class Bs12Schedule final : public ScheduledGroup {
 public:
  std::string name() const override { return "bs12"; }
  std::size_t word_size() const override { return 3; }
  Word identity() const override { return {0, 0, 0}; }

  // word = [p, q, k] for (p / 2^q, k) with p odd or (p,q) = (0,0)
  Word mul(const Word& a, const Word& b) const override {
    auto [p, q] = dyadic_add(a[0], a[1], shift(b[0], b[1], a[2]));
    return {p, q, a[2] + b[2]};
  }

  Word inv(const Word& a) const override {
    auto [p, q] = shift(-a[0], a[1], -a[2]);
    return {p, q, -a[2]};
  }

  std::vector<Word> generators() const override { return {{1, 0, 0}, {0, 0, 1}}; }

  Word sample_word(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::int64_t> num(-8, 8), den(0, 3), twist(-3, 3);
    auto [p, q] = reduce(num(rng), den(rng));
    return {p, q, twist(rng)};
  }

  std::size_t stage_count() const override { return SIZE_MAX; }

  Code project(std::size_t index, const Word& w) const override {
    std::int64_t m = modulus(index);
    const auto& mp = powers_for(m);
    std::int64_t inv2 = (m + 1) / 2;  // 2 * (m+1)/2 = m + 1 = 1 mod m
    std::int64_t a = ((w[0] % m) + m) % m;
    for (std::int64_t i = 0; i < w[1]; ++i) a = a * inv2 % m;
    std::int64_t k = ((w[2] % mp.order) + mp.order) % mp.order;
    return static_cast<Code>(a) + static_cast<Code>(m) * static_cast<Code>(k);
  }

  std::string stage_params(std::size_t index) const override {
    std::int64_t m = modulus(index);
    return "m=" + std::to_string(m) + ",e=" + std::to_string(powers_for(m).order);
  }

  std::string format(const Word& w) const override {
    std::ostringstream out;
    out << "(" << w[0];
    if (w[1] > 0) out << "/" << (std::int64_t{1} << w[1]);
    out << "," << w[2] << ")";
    return out.str();
  }

  Word parse(const std::string& text) const override {
    auto parts = split_top_level(strip_parens(trim(text)));
    if (parts.size() != 2) fail("InvalidInput", "expected (a,k) with a dyadic");
    std::int64_t p, q = 0;
    auto slash = parts[0].find('/');
    if (slash == std::string::npos) {
      p = parse_int(parts[0]);
    } else {
      p = parse_int(parts[0].substr(0, slash));
      std::int64_t den = parse_int(parts[0].substr(slash + 1));
      if (den <= 0 || (den & (den - 1)) != 0)
        fail("InvalidInput", "denominator must be a power of 2");
      while (den > 1) {
        den >>= 1;
        ++q;
      }
    }
    auto [rp, rq] = reduce(p, q);
    return {rp, rq, parse_int(parts[1])};
  }

 protected:
  StageRef build_stage(std::size_t index) const override {
    std::int64_t m = modulus(index);
    const auto& mp = powers_for(m);
    return std::make_shared<CongruenceStage>(
        1, m, mp.powers, "C_" + std::to_string(m) + " x| C_" + std::to_string(mp.order));
  }

 private:
  static std::int64_t modulus(std::size_t index) {
    return 3 + 2 * static_cast<std::int64_t>(index);
  }

  static std::pair<std::int64_t, std::int64_t> reduce(std::int64_t p, std::int64_t q) {
    if (p == 0) return {0, 0};
    while (q > 0 && p % 2 == 0) {
      p /= 2;
      --q;
    }
    return {p, q};
  }

  static std::int64_t pow2(std::int64_t e) { return std::int64_t{1} << e; }

  // 2^k * (p / 2^q), reduced
  static std::pair<std::int64_t, std::int64_t> shift(std::int64_t p, std::int64_t q,
                                                     std::int64_t k) {
    std::int64_t e = q - k;
    if (e < 0) {
      p *= pow2(-e);
      e = 0;
    }
    return reduce(p, e);
  }

  static std::pair<std::int64_t, std::int64_t> dyadic_add(std::int64_t p1, std::int64_t q1,
                                                          std::pair<std::int64_t, std::int64_t> b) {
    auto [p2, q2] = b;
    std::int64_t q = std::max(q1, q2);
    std::int64_t p = p1 * pow2(q - q1) + p2 * pow2(q - q2);
    return reduce(p, q);
  }

  const ModularPowers& powers_for(std::int64_t m) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = powers_cache_.find(m);
    if (it == powers_cache_.end())
      it = powers_cache_.emplace(m, matrix_powers_mod({{2}}, m)).first;
    return it->second;
  }

  mutable std::mutex mutex_;
  mutable std::map<std::int64_t, ModularPowers> powers_cache_;
};

// --- finite ------------------------------------------------------------------

class FiniteSchedule final : public ScheduledGroup {
 public:
  explicit FiniteSchedule(GroupRef g) : g_(std::move(g)) {}

  std::string name() const override {
    return "finite(" + std::to_string(g_->order()) + ")";
  }
  std::size_t word_size() const override { return 1; }
  Word identity() const override { return {0}; }
  Word mul(const Word& a, const Word& b) const override {
    return {g_->mul(static_cast<int>(a[0]), static_cast<int>(b[0]))};
  }
  Word inv(const Word& a) const override { return {g_->inv(static_cast<int>(a[0]))}; }
  std::vector<Word> generators() const override {
    std::vector<Word> out;
    for (int s : g_->generators()) out.push_back({s});
    return out;
  }
  Word sample_word(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> pick(0, g_->order() - 1);
    return {pick(rng)};
  }
  std::size_t stage_count() const override { return 1; }
  Code project(std::size_t index, const Word& w) const override {
    if (index != 0) fail("InvalidArgs", "finite schedules have a single stage");
    return static_cast<Code>(w[0]);
  }
  std::string stage_params(std::size_t) const override { return "full"; }
  std::string format(const Word& w) const override {
    return g_->label(static_cast<int>(w[0]));
  }
  Word parse(const std::string& text) const override {
    auto t = trim(text);
    if (auto idx = g_->find_label(t)) return {*idx};
    if (auto idx = g_->find_label(text)) return {*idx};
    std::int64_t v = parse_int(t);
    if (v < 0 || v >= g_->order()) fail("InvalidInput", "element index out of range");
    return {v};
  }
  GroupRef finite_group() const override { return g_; }

 protected:
  StageRef build_stage(std::size_t index) const override {
    if (index != 0) fail("InvalidArgs", "finite schedules have a single stage");
    return std::make_shared<TableStage>(g_);
  }

 private:
  GroupRef g_;
};

// --- product -----------------------------------------------------------------

class ProductSchedule final : public ScheduledGroup {
 public:
  ProductSchedule(SchedRef a, SchedRef b) : a_(std::move(a)), b_(std::move(b)) {}

  std::string name() const override { return a_->name() + " x " + b_->name(); }
  std::size_t word_size() const override { return a_->word_size() + b_->word_size(); }
  Word identity() const override { return join(a_->identity(), b_->identity()); }
  Word mul(const Word& x, const Word& y) const override {
    return join(a_->mul(left(x), left(y)), b_->mul(right(x), right(y)));
  }
  Word inv(const Word& x) const override { return join(a_->inv(left(x)), b_->inv(right(x))); }

  std::vector<Word> generators() const override {
    std::vector<Word> out;
    for (const auto& g : a_->generators()) out.push_back(join(g, b_->identity()));
    for (const auto& g : b_->generators()) out.push_back(join(a_->identity(), g));
    return out;
  }

  Word sample_word(std::mt19937_64& rng) const override {
    return join(a_->sample_word(rng), b_->sample_word(rng));
  }

  std::size_t stage_count() const override {
    return std::min(a_->stage_count(), b_->stage_count());
  }

  Code project(std::size_t index, const Word& w) const override {
    return a_->project(index, left(w)) * b_->stage(index)->order() +
           b_->project(index, right(w));
  }

  std::string stage_params(std::size_t index) const override {
    return a_->stage_params(index) + ";" + b_->stage_params(index);
  }

  std::string format(const Word& w) const override {
    return "(" + a_->format(left(w)) + "," + b_->format(right(w)) + ")";
  }

  Word parse(const std::string& text) const override {
    auto parts = split_top_level(strip_parens(trim(text)));
    if (parts.size() != 2) fail("InvalidInput", "expected a pair of factor elements");
    return join(a_->parse(parts[0]), b_->parse(parts[1]));
  }

 protected:
  StageRef build_stage(std::size_t index) const override {
    return std::make_shared<ProductStage>(a_->stage(index), b_->stage(index));
  }

 private:
  Word left(const Word& w) const { return Word(w.begin(), w.begin() + a_->word_size()); }
  Word right(const Word& w) const { return Word(w.begin() + a_->word_size(), w.end()); }
  static Word join(const Word& a, const Word& b) {
    Word out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  SchedRef a_, b_;
};

}  // namespace

SchedRef integer_schedule() { return std::make_shared<IntegerSchedule>(); }

SchedRef lattice_semidirect_schedule(const std::vector<std::vector<std::int64_t>>& a) {
  return std::make_shared<LatticeSchedule>(a);
}

SchedRef bs12_schedule() { return std::make_shared<Bs12Schedule>(); }

SchedRef finite_schedule(const GroupRef& g) { return std::make_shared<FiniteSchedule>(g); }

SchedRef product_schedule(const SchedRef& a, const SchedRef& b) {
  return std::make_shared<ProductSchedule>(a, b);
}

}  // namespace nestsep
