#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "symsq/modform.hpp"

namespace symsq::modform {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct NttPrime {
  u64 p;
  u64 g;
};

// p - 1 divisible by 2^23 at least; the product exceeds 2^145.
constexpr NttPrime kPrimes[] = {
    {998244353, 3}, {167772161, 3}, {469762049, 3}, {754974721, 11}, {2013265921, 31},
};
constexpr int kNumPrimes = 5;

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Montgomery arithmetic with R = 2^32; every prime is below 2^31.
struct Mont {
  std::uint32_t p, ninv, r2;
  explicit Mont(std::uint32_t mod) : p(mod) {
    std::uint32_t inv = mod;
    for (int i = 0; i < 5; ++i) inv *= 2u - mod * inv;
    ninv = 0u - inv;
    r2 = static_cast<std::uint32_t>((static_cast<u128>(1) << 64) % mod);
  }
  std::uint32_t reduce(u64 t) const {
    const std::uint32_t m = static_cast<std::uint32_t>(t) * ninv;
    const std::uint32_t r = static_cast<std::uint32_t>((t + static_cast<u64>(m) * p) >> 32);
    return r >= p ? r - p : r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(static_cast<u64>(a) * b); }
  std::uint32_t to(std::uint32_t a) const { return mul(a, r2); }
  std::uint32_t from(std::uint32_t a) const { return reduce(a); }
};

// In-place transform of Montgomery-form values; the inverse includes 1/n.
void ntt(std::vector<std::uint32_t>& a, bool invert, const NttPrime& pr, const Mont& mt) {
  const std::size_t n = a.size();
  const std::uint32_t p = mt.p;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint32_t> tw(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u64 w = pow_mod(pr.g, (p - 1) / len, p);
    if (invert) w = pow_mod(w, p - 2, p);
    const std::size_t half = len / 2;
    const std::uint32_t wm = mt.to(static_cast<std::uint32_t>(w));
    tw[0] = mt.to(1);
    for (std::size_t j = 1; j < half; ++j) tw[j] = mt.mul(tw[j - 1], wm);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint32_t* lo = a.data() + i;
      std::uint32_t* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const std::uint32_t u = lo[j];
        const std::uint32_t v = mt.mul(hi[j], tw[j]);
        const std::uint32_t s = u + v;
        lo[j] = s >= p ? s - p : s;
        hi[j] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (invert) {
    const std::uint32_t ninv = mt.to(static_cast<std::uint32_t>(pow_mod(n, p - 2, p)));
    for (auto& x : a) x = mt.mul(x, ninv);
  }
}

// Coefficients of prod (1 - x^n)^24 mod p, degrees 0..len-1.
std::vector<u64> eta24_mod(std::size_t len, const NttPrime& pr) {
  const Mont mt(static_cast<std::uint32_t>(pr.p));
  const u64 p = pr.p;
  std::size_t size = 1;
  while (size < 2 * len) size <<= 1;
  std::vector<std::uint32_t> cur(len, 0);
  // prod (1 - x^n)^3 = sum_k (-1)^k (2k+1) x^{k(k+1)/2}
  for (u64 k = 0;; ++k) {
    const u64 d = k * (k + 1) / 2;
    if (d >= len) break;
    const u64 v = (2 * k + 1) % p;
    cur[d] = mt.to(static_cast<std::uint32_t>(k % 2 == 0 ? v : (p - v) % p));
  }
  for (int step = 0; step < 3; ++step) {
    cur.resize(size, 0);
    ntt(cur, false, pr, mt);
    for (auto& x : cur) x = mt.mul(x, x);
    ntt(cur, true, pr, mt);
    cur.resize(len);
  }
  std::vector<u64> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = mt.from(cur[i]);
  return out;
}

}  // namespace

std::vector<i128> tau_table(i64 limit, Exec exec) {
  if (limit < 1) throw DomainError("tau_table: limit must be positive");
  const std::size_t len = static_cast<std::size_t>(limit);
  std::vector<std::vector<u64>> res(kNumPrimes);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < kNumPrimes; ++i) res[i] = eta24_mod(len, kPrimes[i]);
  } else {
    for (int i = 0; i < kNumPrimes; ++i) res[i] = eta24_mod(len, kPrimes[i]);
  }
  // Garner: x = v0 + v1 p0 + v2 p0 p1 + ...; inv[i][j] = p_j^{-1} mod p_i.
  u64 inv[kNumPrimes][kNumPrimes] = {};
  for (int i = 0; i < kNumPrimes; ++i) {
    for (int j = 0; j < i; ++j) inv[i][j] = pow_mod(kPrimes[j].p % kPrimes[i].p, kPrimes[i].p - 2, kPrimes[i].p);
  }
  u128 radix[kNumPrimes];
  u128 modulus = 1;
  for (int i = 0; i < kNumPrimes; ++i) {
    radix[i] = modulus;
    modulus *= kPrimes[i].p;
  }
  std::vector<i128> tau(len + 1, 0);
  for (std::size_t n = 0; n < len; ++n) {
    u64 v[kNumPrimes];
    for (int i = 0; i < kNumPrimes; ++i) {
      const u64 p = kPrimes[i].p;
      u64 t = res[i][n];
      for (int j = 0; j < i; ++j) {
        const u64 vj = v[j] % p;
        t = (t + p - vj) % p * inv[i][j] % p;
      }
      v[i] = t;
    }
    u128 x = 0;
    for (int i = 0; i < kNumPrimes; ++i) x += static_cast<u128>(v[i]) * radix[i];
    const bool negative = v[kNumPrimes - 1] > kPrimes[kNumPrimes - 1].p / 2;
    tau[n + 1] = negative ? static_cast<i128>(x - modulus) : static_cast<i128>(x);
  }
  return tau;
}

std::vector<i128> tau_table_naive(i64 limit) {
  if (limit < 1) throw DomainError("tau_table_naive: limit must be positive");
  std::vector<i128> c(static_cast<std::size_t>(limit), 0);
  c[0] = 1;
  for (i64 n = 1; n < limit; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (i64 d = limit - 1; d >= n; --d) c[d] -= c[d - n];
    }
  }
  std::vector<i128> tau(static_cast<std::size_t>(limit) + 1, 0);
  for (i64 n = 1; n <= limit; ++n) tau[n] = c[n - 1];
  return tau;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

i128 parse_i128(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i >= s.size()) throw DomainError("parse_i128: empty number");
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("parse_i128: bad digit in '" + s + "'");
    v = v * 10 + (neg ? -(s[i] - '0') : (s[i] - '0'));
  }
  return v;
}

namespace {
constexpr const char* kVersion = "# delta-k12-v1";
}

void write_tau_csv(const std::filesystem::path& path, const std::vector<i128>& tau) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("write_tau_csv: cannot open " + tmp);
    out << kVersion << "\nn,tau\n";
    for (std::size_t n = 1; n < tau.size(); ++n) out << n << ',' << to_string(tau[n]) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<i128>> read_tau_csv(const std::filesystem::path& path, i64 limit) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kVersion) return std::nullopt;
  if (!std::getline(in, line) || line != "n,tau") return std::nullopt;
  std::vector<i128> tau(static_cast<std::size_t>(limit) + 1, 0);
  i64 expected = 1;
  while (expected <= limit && std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
      if (std::stoll(line.substr(0, comma)) != expected) return std::nullopt;
      tau[expected] = parse_i128(line.substr(comma + 1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    ++expected;
  }
  if (expected <= limit) return std::nullopt;
  return tau;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("SYMSQ_CACHE_DIR"); env && *env) return env;
  return std::filesystem::path(".symsq_cache");
}

}  // namespace symsq::modform
