#include "radon/arith.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace radon {

namespace {

void check_limit(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be >= 1");
}

}  // namespace

ArithTable::ArithTable(std::string name, std::vector<std::int64_t> values_from_1)
    : name_(std::move(name)), values_(std::move(values_from_1)) {
  if (values_.empty()) throw std::invalid_argument("ArithTable needs limit >= 1");
}

std::int64_t ArithTable::at(std::int64_t n) const {
  if (n < 1 || n > limit())
    throw std::out_of_range(name_ + ": index " + std::to_string(n) +
                            " outside [1, " + std::to_string(limit()) + "]");
  return values_[static_cast<std::size_t>(n - 1)];
}

ArithTable sieve_totient(std::int64_t limit) {
  check_limit(limit);
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::int64_t> primes;
  phi[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (phi[i] == 0) {  // i is prime
      phi[i] = i - 1;
      primes.push_back(i);
    }
    for (std::int64_t p : primes) {
      if (p > limit / i) break;
      if (i % p == 0) {
        phi[i * p] = phi[i] * p;
        break;
      }
      phi[i * p] = phi[i] * (p - 1);
    }
  }
  phi.erase(phi.begin());
  return ArithTable("phi", std::move(phi));
}

ArithTable sieve_divisor_count(std::int64_t limit) {
  check_limit(limit);
  std::vector<std::int64_t> d(static_cast<std::size_t>(limit) + 1, 0);
  // exponent of the smallest prime factor, needed for the linear recurrence
  std::vector<std::uint8_t> e(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::int64_t> primes;
  d[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (d[i] == 0) {
      d[i] = 2;
      e[i] = 1;
      primes.push_back(i);
    }
    for (std::int64_t p : primes) {
      if (p > limit / i) break;
      if (i % p == 0) {
        e[i * p] = static_cast<std::uint8_t>(e[i] + 1);
        d[i * p] = d[i] / (e[i] + 1) * (e[i] + 2);
        break;
      }
      e[i * p] = 1;
      d[i * p] = d[i] * 2;
    }
  }
  d.erase(d.begin());
  return ArithTable("d", std::move(d));
}

ArithTable sieve_mobius(std::int64_t limit) {
  check_limit(limit);
  std::vector<std::int64_t> mu(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  mu[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      mu[i] = -1;
      primes.push_back(i);
    }
    for (std::int64_t p : primes) {
      if (p > limit / i) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  mu.erase(mu.begin());
  return ArithTable("mu", std::move(mu));
}

namespace {

// shared linear sieve for Omega / omega; with_multiplicity selects Omega
ArithTable sieve_prime_factor_count(std::int64_t limit, bool with_multiplicity,
                                    const char* name) {
  check_limit(limit);
  std::vector<std::int64_t> w(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> primes;
  w[1] = 0;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      w[i] = 1;
      primes.push_back(i);
    }
    for (std::int64_t p : primes) {
      if (p > limit / i) break;
      composite[i * p] = true;
      if (i % p == 0) {
        w[i * p] = w[i] + (with_multiplicity ? 1 : 0);
        break;
      }
      w[i * p] = w[i] + 1;
    }
  }
  w.erase(w.begin());
  return ArithTable(name, std::move(w));
}

}  // namespace

ArithTable sieve_omega(std::int64_t limit) {
  return sieve_prime_factor_count(limit, true, "omega");
}

ArithTable sieve_omega_distinct(std::int64_t limit) {
  return sieve_prime_factor_count(limit, false, "omega_distinct");
}

ArithTable sieve_prime_pi(std::int64_t limit) {
  check_limit(limit);
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  std::vector<std::int64_t> pi(static_cast<std::size_t>(limit), 0);
  std::int64_t count = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (n >= 2 && !composite[n]) ++count;
    pi[static_cast<std::size_t>(n - 1)] = count;
  }
  return ArithTable("pi", std::move(pi));
}

ArithFn::ArithFn(ArithTable table, Parity parity, Minorant minorant) {
  if (parity == Parity::raw)
    throw std::invalid_argument("raw ArithFn must be built via ArithFn::raw");
  table_ = std::make_shared<const ArithTable>(std::move(table));
  name_ = table_->name();
  limit_ = table_->limit();
  parity_ = parity;
  minorant_ = minorant;
}

ArithFn ArithFn::raw(std::string name, std::int64_t limit,
                     std::function<std::int64_t(std::int64_t)> fn,
                     Minorant minorant) {
  if (limit < 1) throw std::invalid_argument("ArithFn limit must be >= 1");
  if (!fn) throw std::invalid_argument("raw ArithFn needs a callable");
  ArithFn out;
  out.raw_ = std::move(fn);
  out.name_ = std::move(name);
  out.limit_ = limit;
  out.parity_ = Parity::raw;
  out.minorant_ = minorant;
  return out;
}

std::int64_t ArithFn::operator()(std::int64_t m) const {
  if (m == 0) throw std::domain_error(name_ + " is undefined at m = 0");
  std::int64_t a = m < 0 ? -m : m;
  if (a > limit_)
    throw std::domain_error(name_ + ": |m| = " + std::to_string(a) +
                            " exceeds table limit " + std::to_string(limit_));
  switch (parity_) {
    case Parity::raw:
      return raw_(m);
    case Parity::even:
      return (*table_)[a];
    case Parity::sign_odd: {
      std::int64_t v = (*table_)[a];
      return m < 0 ? -v : v;
    }
  }
  return 0;  // unreachable
}

double ArithFn::minorant(double abs_m) const {
  switch (minorant_) {
    case Minorant::sqrt_half:
      return std::sqrt(abs_m / 2.0);
    case Minorant::log2_minus_1:
      return std::log2(abs_m) - 1.0;
    case Minorant::none:
      break;
  }
  throw std::domain_error(name_ + " has no declared growth minorant");
}

namespace {

constexpr char kMagic[8] = {'R', 'A', 'D', 'T', 'B', 'L', '0', '1'};

void put_le64(std::ofstream& out, std::int64_t v) {
  unsigned char b[8];
  auto u = static_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::int64_t get_le64(std::ifstream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return static_cast<std::int64_t>(u);
}

}  // namespace

void save_table(const std::filesystem::path& path, const ArithTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(kMagic, 8);
  for (std::int64_t v : table.values()) put_le64(out, v);
  if (!out) throw std::runtime_error("short write to " + path.string());
}

ArithTable load_table(const std::filesystem::path& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || !std::equal(magic, magic + 8, kMagic))
    throw std::runtime_error(path.string() + ": bad table magic");
  auto bytes = std::filesystem::file_size(path);
  if (bytes < 16 || (bytes - 8) % 8 != 0)
    throw std::runtime_error(path.string() + ": bad table size");
  std::int64_t n = static_cast<std::int64_t>((bytes - 8) / 8);
  std::vector<std::int64_t> values(static_cast<std::size_t>(n));
  for (auto& v : values) v = get_le64(in);
  if (!in) throw std::runtime_error(path.string() + ": short read");
  return ArithTable(std::move(name), std::move(values));
}

ArithTable sieve_by_name(const std::string& fn_name, std::int64_t limit) {
  if (fn_name == "phi") return sieve_totient(limit);
  if (fn_name == "pi") return sieve_prime_pi(limit);
  if (fn_name == "d") return sieve_divisor_count(limit);
  if (fn_name == "mu") return sieve_mobius(limit);
  if (fn_name == "omega") return sieve_omega(limit);
  throw std::invalid_argument("unknown arithmetic function: " + fn_name);
}

ArithTable cached_sieve(const std::string& fn_name, std::int64_t limit,
                        const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return sieve_by_name(fn_name, limit);
  auto path = cache_dir / (fn_name + "_" + std::to_string(limit) + ".tbl");
  if (std::filesystem::exists(path)) {
    try {
      ArithTable t = load_table(path, fn_name);
      if (t.limit() == limit) return t;
    } catch (const std::exception&) {
      // unreadable cache entry: fall through and resieve
    }
  }
  ArithTable t = sieve_by_name(fn_name, limit);
  std::filesystem::create_directories(cache_dir);
  save_table(path, t);
  return t;
}

ArithFn make_arith_fn(const std::string& fn_name, Parity parity,
                      std::int64_t limit,
                      const std::filesystem::path& cache_dir) {
  Minorant minorant = Minorant::none;
  if (fn_name == "phi") minorant = Minorant::sqrt_half;
  if (fn_name == "pi") minorant = Minorant::log2_minus_1;
  return ArithFn(cached_sieve(fn_name, limit, cache_dir), parity, minorant);
}

}  // namespace radon
