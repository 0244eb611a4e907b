#include "abundancy/factorization.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace abundancy {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void sort_and_merge(std::vector<PrimePower>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  std::vector<PrimePower> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().prime == t.prime) {
      merged.back().exponent += t.exponent;
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms = std::move(merged);
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard-Brent on 64-bit composites; always terminates with a proper factor.
u64 rho_u64(u64 n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 x = y, ys = y, q = 1, g = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = static_cast<u64>(static_cast<u128>(q) * (x > y ? x - y : y - x) % n);
        }
        g = gcd_u64(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Pollard-Brent on arbitrary-precision composites. Returns 0 when the budget
// runs out before a proper factor appears.
Integer rho_big(const Integer& n, std::uint64_t budget, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  std::uint64_t spent = 0;
  Integer x, y, ys, q, g, t;
  while (spent < budget) {
    Integer c = gr.get_z_range(n - 1) + 1;
    y = gr.get_z_range(n);
    q = 1;
    g = 1;
    const std::uint64_t m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (std::uint64_t r = 1; g == 1 && spent < budget; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      spent += r;
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          t = x - y;
          q *= t;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        if (spent >= budget) break;
      }
    }
    if (g == n) {
      do {
        step(ys);
        t = x - ys;
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        ++spent;
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].exponent == 0) throw std::invalid_argument("factorization exponent must be >= 1");
    if (i > 0 && !(terms[i - 1].prime < terms[i].prime)) {
      throw std::invalid_argument("factorization primes must be strictly increasing");
    }
    if (terms[i].prime < 2 || !is_prime(terms[i].prime)) {
      throw std::invalid_argument("not a prime: " + terms[i].prime.get_str());
    }
  }
  terms_ = std::move(terms);
}

Factorization::Factorization(std::initializer_list<std::pair<long, unsigned long>> terms) {
  std::vector<PrimePower> v;
  for (const auto& [p, a] : terms) v.push_back({Integer(p), a});
  *this = Factorization(std::move(v));
}

Factorization Factorization::from_trusted(std::vector<PrimePower> terms) {
  sort_and_merge(terms);
  Factorization f;
  f.terms_ = std::move(terms);
  return f;
}

Integer Factorization::value() const {
  Integer n = 1;
  for (const auto& t : terms_) n *= ipow(t.prime, t.exponent);
  return n;
}

unsigned long Factorization::exponent_of(const Integer& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const PrimePower& t, const Integer& v) { return t.prime < v; });
  return (it != terms_.end() && it->prime == p) ? it->exponent : 0;
}

Factorization Factorization::divided_by(const Integer& p) const {
  Factorization out = *this;
  auto it = std::find_if(out.terms_.begin(), out.terms_.end(),
                         [&](const PrimePower& t) { return t.prime == p; });
  if (it == out.terms_.end()) throw std::invalid_argument("prime does not divide n");
  if (--it->exponent == 0) out.terms_.erase(it);
  return out;
}

Factorization Factorization::times(const Factorization& other) const {
  std::vector<PrimePower> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return from_trusted(std::move(all));
}

Factorization Factorization::power(unsigned long k) const {
  if (k == 0) return {};
  Factorization out = *this;
  for (auto& t : out.terms_) t.exponent *= k;
  return out;
}

std::string Factorization::to_string() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '*';
    s += t.prime.get_str();
    if (t.exponent != 1) s += '^' + std::to_string(t.exponent);
  }
  return s;
}

PartialFactorization PartialFactorization::times(const PartialFactorization& other) const {
  PartialFactorization out;
  out.known = known.times(other.known);
  out.cofactor = cofactor * other.cofactor;
  out.trial_floor = std::min(trial_floor, other.trial_floor);
  out.all_proven = all_proven && other.all_proven;
  return out;
}

PartialFactorization factorize_partial(const Integer& n, const FactorOptions& options) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::vector<PrimePower> found;
  PartialFactorization out;
  Integer rem = n;

  // Trial division.
  bool rem_is_prime = false;
  for (std::uint32_t p : trial_primes()) {
    if (p > options.trial_limit) break;
    if (rem == 1) break;
    if (Integer(p) * p > rem) {
      rem_is_prime = true;
      break;
    }
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), Integer(p).get_mpz_t());
      found.push_back({Integer(p), e});
    }
  }
  out.trial_floor = options.trial_limit;

  std::mt19937_64 rng(options.seed);
  std::vector<Integer> work;
  if (rem_is_prime) {
    found.push_back({rem, 1});
  } else if (rem > 1) {
    work.push_back(rem);
  }
  while (!work.empty()) {
    Integer m = std::move(work.back());
    work.pop_back();
    if (m == 1) continue;
    if (auto pr = is_prime(m); pr.prime) {
      if (pr.certainty == Certainty::Probable) out.all_proven = false;
      found.push_back({m, 1});
      continue;
    }
    Integer d;
    if (fits_u64(m)) {
      d = from_u64(rho_u64(to_u64(m), rng));
    } else {
      d = rho_big(m, options.rho_budget, rng);
    }
    if (d == 0) {
      out.cofactor *= m;
      continue;
    }
    work.push_back(m / d);
    work.push_back(d);
  }
  out.known = Factorization::from_trusted(std::move(found));
  return out;
}

Factorization factorize(const Integer& n, const FactorOptions& options) {
  PartialFactorization pf = factorize_partial(n, options);
  if (!pf.complete()) {
    throw std::runtime_error("factoring budget exhausted; unfactored cofactor " + pf.cofactor.get_str());
  }
  return pf.known;
}

Factorization factorize(std::uint64_t n) { return factorize(from_u64(n)); }

Factorization factorize(std::uint32_t n, const SpfTable& table) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  if (n > table.limit()) throw std::out_of_range("n exceeds the sieve table");
  std::vector<PrimePower> terms;
  while (n > 1) {
    std::uint32_t p = table.spf(n);
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    terms.push_back({Integer(p), e});
  }
  return Factorization::from_trusted(std::move(terms));
}

}  // namespace abundancy
