#include "duadic/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "duadic/duadic.hpp"

namespace duadic {

namespace {

struct Run {
    std::uint64_t start;
    std::uint64_t length;
};

// Maximal circular runs of ones in `bits` (length n), each reported once.
std::vector<Run> circular_runs(const BitVec& bits, std::uint64_t n) {
    std::vector<Run> runs;
    const std::size_t ones = bits.count();
    if (ones == 0) return runs;
    if (ones == n) {
        runs.push_back({0, n});
        return runs;
    }
    // start scanning just after some zero so no run is split by the origin
    std::uint64_t zero = 0;
    while (bits.test(zero)) ++zero;
    std::uint64_t pos = (zero + 1) % n;
    std::uint64_t scanned = 0;
    while (scanned < n) {
        if (!bits.test(pos)) {
            pos = (pos + 1) % n;
            ++scanned;
            continue;
        }
        const std::uint64_t start = pos;
        std::uint64_t len = 0;
        while (scanned < n && bits.test(pos)) {
            ++len;
            ++scanned;
            pos = (pos + 1) % n;
        }
        runs.push_back({start, len});
    }
    return runs;
}

}  // namespace

BchCertificate max_ap_run(const DefiningSet& T, std::uint64_t v) {
    const std::uint64_t n = T.modulus();
    if (n == 0) throw std::invalid_argument("empty modulus");
    const auto inv = mod_inverse(v % n, n);
    if (!inv || std::gcd(v, n) != 1) throw std::invalid_argument("BCH difference v must be a unit modulo n");

    // an AP with difference v in T is a consecutive run in v^{-1} T
    const DefiningSet relabeled = T.scaled(*inv);
    BchCertificate cert;
    cert.v = v % n;
    cert.gamma_exponent = *inv;
    bool found = false;
    for (const Run& run : circular_runs(relabeled.bits(), n)) {
        const std::uint64_t start = (run.start * cert.v) % n;
        if (!found || run.length > cert.run_length || (run.length == cert.run_length && start < cert.start)) {
            cert.run_length = run.length;
            cert.start = start;
            found = true;
        }
    }
    cert.d_lower = cert.run_length + 1;
    return cert;
}

std::vector<std::uint64_t> default_v_candidates(unsigned m) {
    const unsigned low = (m % 2 == 1) ? (m - 1) / 2 : m / 2;
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::vector<std::uint64_t> out;
    for (unsigned e : {low, low + 1}) {
        const std::uint64_t v = ((std::uint64_t{1} << e) - 1) % n;
        if (v == 0 || std::gcd(v, n) != 1) continue;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

BchCertificate best_certificate(const DefiningSet& T, std::span<const std::uint64_t> candidates) {
    if (candidates.empty()) throw std::invalid_argument("no BCH difference candidates supplied");
    std::optional<BchCertificate> best;
    for (std::uint64_t v : candidates) {
        BchCertificate c = max_ap_run(T, v);
        if (!best || c.run_length > best->run_length) best = c;
    }
    return *best;
}

BchCertificate exhaustive_certificate(const DefiningSet& T) {
    const std::uint64_t n = T.modulus();
    if (n >= (1u << 14)) throw std::invalid_argument("exhaustive BCH sweep limited to n < 2^14");
    BitVec seen(n);
    std::optional<BchCertificate> best;
    for (std::uint64_t v = 1; v < n; ++v) {
        if (seen.test(v) || std::gcd(v, n) != 1) continue;
        std::uint64_t x = v;
        do {
            seen.set(x);
            seen.set(n - x);
            x = (2 * x) % n;
        } while (x != v);
        BchCertificate c = max_ap_run(T, v);
        if (!best || c.run_length > best->run_length) best = c;
    }
    if (!best) return max_ap_run(T, 1);
    return *best;
}

bool certificate_holds(const DefiningSet& T, const BchCertificate& cert) {
    const std::uint64_t n = T.modulus();
    if (std::gcd(cert.v, n) != 1 || cert.d_lower != cert.run_length + 1) return false;
    std::uint64_t x = cert.start % n;
    for (std::uint64_t i = 0; i < cert.run_length; ++i, x = (x + cert.v) % n)
        if (!T.contains(x)) return false;
    return true;
}

std::string lemma_name(Lemma lemma) {
    switch (lemma) {
        case Lemma::L3: return "L3";
        case Lemma::L4: return "L4";
        case Lemma::L5: return "L5";
        case Lemma::L6: return "L6";
    }
    return "?";
}

std::string side_name(Side side) { return side == Side::S ? "S" : "S'"; }

std::string residue_case_name(ResidueCase rc) {
    switch (rc) {
        case ResidueCase::any: return "any";
        case ResidueCase::m_equiv_t: return "m=t mod 2r";
        case ResidueCase::m_equiv_t_plus_r: return "m=t+r mod 2r";
    }
    return "?";
}

namespace {

struct LemmaRule {
    unsigned excluded_t;
    bool needs_r_above_2;
    bool second_is_plus;      // S holds (t+r+1)/2 rather than (t+r-1)/2
    bool third_is_t_minus_1;  // S holds t-1 rather than 1
};

LemmaRule rule_for(Lemma lemma) {
    switch (lemma) {
        case Lemma::L3: return {3, true, false, true};
        case Lemma::L4: return {1, false, false, false};
        case Lemma::L5: return {3, false, true, true};
        case Lemma::L6: return {1, false, true, false};
    }
    throw std::logic_error("unknown lemma");
}

std::string residue_list(std::initializer_list<unsigned> xs) {
    std::string s = "{";
    bool first = true;
    for (unsigned x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + "}";
}

}  // namespace

std::string lemma_hypothesis_failure(const WeightClassSpec& spec, Lemma lemma) {
    if (!spec.checked()) return "spec was built unchecked";
    const unsigned r = spec.r();
    const unsigned t = spec.t();
    const LemmaRule rule = rule_for(lemma);
    if (t % 2 == 0) return "t = m mod r must be odd";
    if (t == rule.excluded_t) return "t = " + std::to_string(t) + " is excluded";
    if (rule.needs_r_above_2 && r <= 2) return "requires even r > 2";
    if (!is_duadic_zr(spec)) return "S' is not (t - S) mod r";
    const unsigned a = ((t - 1) / 2) % r;
    const unsigned b = (rule.second_is_plus ? (t + r + 1) / 2 : (t + r - 1) / 2) % r;
    const unsigned c = (rule.third_is_t_minus_1 ? t - 1 : 1) % r;
    if (!spec.contains_residue(a) || !spec.contains_residue(b) || !spec.contains_residue(c))
        return "S must contain " + residue_list({a, b, c});
    const unsigned a2 = ((t + 1) / 2) % r;
    const unsigned b2 = (rule.second_is_plus ? (t + r - 1) / 2 : (t + r + 1) / 2) % r;
    if (spec.contains_residue(a2) || spec.contains_residue(b2)) return "S' must contain " + residue_list({a2, b2});
    return {};
}

LemmaWindow lemma_window(unsigned r, unsigned m, Lemma lemma, Side side) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("lemma windows need odd m >= 3");
    const unsigned h = (m - 1) / 2;
    const std::uint64_t v_low = (std::uint64_t{1} << h) - 1;
    const std::uint64_t v_high = (std::uint64_t{1} << (h + 1)) - 1;
    const std::uint64_t short_window = std::uint64_t{1} << h;
    const std::uint64_t long_window = short_window + 2;
    const bool same = (m % (2 * r)) == (m % r);  // m = t (mod 2r)
    const ResidueCase branch = same ? ResidueCase::m_equiv_t : ResidueCase::m_equiv_t_plus_r;
    const bool on_s = side == Side::S;

    switch (lemma) {
        case Lemma::L3: return {on_s ? v_low : v_high, long_window, ResidueCase::any};
        case Lemma::L4: return {on_s ? v_low : v_high, short_window, ResidueCase::any};
        case Lemma::L5:
            if (same) return {on_s ? v_low : v_high, long_window, branch};
            return {on_s ? v_high : v_low, short_window, branch};
        case Lemma::L6:
            if (same) return {on_s ? v_low : v_high, short_window, branch};
            return {on_s ? v_high : v_low, long_window, branch};
    }
    throw std::logic_error("unknown lemma");
}

LemmaCheck verify_lemma_membership(const WeightClassSpec& spec, Lemma lemma, Side side) {
    if (auto why = lemma_hypothesis_failure(spec, lemma); !why.empty())
        throw HypothesisError(lemma_name(lemma) + " hypothesis violated: " + why);
    LemmaCheck check{lemma, side, lemma_window(spec.r(), spec.m(), lemma, side), false, std::nullopt};
    const WeightClassSpec target = side == Side::S ? spec : complement_spec(spec);
    const DefiningSet T = defining_set(target);
    const std::uint64_t n = spec.n();
    for (std::uint64_t a = 1; a <= check.window.window; ++a) {
        if (!T.contains((a % n) * check.window.v % n)) {
            check.first_missing = a;
            break;
        }
    }
    check.holds = !check.first_missing.has_value();
    return check;
}

SqrtBoundReport sqrt_bounds(std::uint64_t n, bool mu_is_minus1) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("square-root bound needs odd n >= 3");
    SqrtBoundReport rep;
    rep.n = n;
    auto smallest = [&](auto&& ok, bool odd_only) {
        std::uint64_t d = odd_only ? 1 : 0;
        while (!ok(d)) d += odd_only ? 2 : 1;
        return d;
    };
    auto square = [n](std::uint64_t d) { return d * d >= n; };
    auto mu = [n](std::uint64_t d) { return d * d - d + 1 >= n; };
    rep.d0_floor_sqrt = smallest(square, false);
    rep.d0_odd_floor_sqrt = smallest(square, true);
    if (mu_is_minus1) {
        rep.d0_mu_minus1 = smallest(mu, false);
        rep.d0_odd_mu_minus1 = smallest(mu, true);
    }
    return rep;
}

}  // namespace duadic
