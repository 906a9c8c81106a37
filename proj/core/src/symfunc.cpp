#include "chromsym/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "chromsym/tableaux.hpp"

namespace chromsym {

char basis_letter(BasisName b) {
    switch (b) {
        case BasisName::e: return 'e';
        case BasisName::h: return 'h';
        case BasisName::m: return 'm';
        case BasisName::p: return 'p';
        case BasisName::s: return 's';
    }
    return '?';
}

BasisName basis_from_letter(char c) {
    switch (c) {
        case 'e': return BasisName::e;
        case 'h': return BasisName::h;
        case 'm': return BasisName::m;
        case 'p': return BasisName::p;
        case 's': return BasisName::s;
    }
    throw std::domain_error(std::string("unknown basis letter: ") + c);
}

SymFunc SymFunc::constant(const Rational& c) {
    SymFunc f;
    f.add_term(Partition(), c);
    return f;
}

SymFunc SymFunc::p_term(const Partition& lambda, const Rational& c) {
    SymFunc f;
    f.add_term(lambda, c);
    return f;
}

Rational SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

SymFunc& SymFunc::add_term(const Partition& lambda, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    SymFunc r = a;
    for (const auto& [lam, c] : b.terms_) r.add_term(lam, c);
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
    SymFunc r = a;
    for (const auto& [lam, c] : b.terms_) r.add_term(lam, -c);
    return r;
}

namespace {

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    SymFunc r;
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) r.add_term(merge_parts(la, lb), ca * cb);
    return r;
}

SymFunc operator*(const Rational& c, const SymFunc& f) {
    SymFunc r;
    for (const auto& [lam, cf] : f.terms_) r.add_term(lam, c * cf);
    return r;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) { return f * g; }

SymFunc omega(const SymFunc& f) {
    SymFunc r;
    for (const auto& [lam, c] : f.terms()) {
        const int sign_exp = lam.size() - lam.length();
        r.add_term(lam, sign_exp % 2 == 0 ? c : -c);
    }
    return r;
}

Rational scalar_product(const SymFunc& f, const SymFunc& g) {
    Rational r = 0;
    for (const auto& [lam, cf] : f.terms()) {
        const Rational cg = g.coefficient(lam);
        if (cg != 0) r += cf * cg * Rational(z(lam));
    }
    return r;
}

PSignature p_signature(const SymFunc& f) {
    PSignature sig;
    for (const auto& [lam, c] : f.terms()) {
        if (c > 0 && !sig.positive_witness) sig.positive_witness = lam;
        if (c < 0 && !sig.negative_witness) sig.negative_witness = lam;
    }
    if (sig.positive_witness && sig.negative_witness) sig.sign = PSign::mixed;
    else if (sig.positive_witness) sig.sign = PSign::positive;
    else if (sig.negative_witness) sig.sign = PSign::negative;
    else sig.sign = PSign::zero;
    return sig;
}

namespace detail {

namespace {

// m-basis element times p_r, by the single-step part-augmentation rule:
// add r to one occurrence of a distinct part value (or append a new part r);
// the coefficient is the multiplicity of the freshly created value.
std::map<Partition, Rational> m_times_pr(const std::map<Partition, Rational>& f, int r) {
    std::map<Partition, Rational> out;
    auto add = [&](const Partition& lam, const Rational& c) {
        auto [it, inserted] = out.emplace(lam, c);
        if (!inserted) it->second += c;
    };
    for (const auto& [mu, c] : f) {
        std::vector<int> values(mu.parts());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        values.push_back(0);  // 0 stands for "append a new part r"
        for (int v : values) {
            std::vector<int> parts(mu.parts());
            if (v != 0) parts.erase(std::find(parts.begin(), parts.end(), v));
            const int created = v + r;
            parts.push_back(created);
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            const int mult = static_cast<int>(std::count(parts.begin(), parts.end(), created));
            add(Partition(std::move(parts)), c * mult);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::mutex cache_mutex;

}  // namespace

const std::map<Partition, std::map<Partition, Rational>>& p_to_m_table(int degree) {
    static std::map<int, std::map<Partition, std::map<Partition, Rational>>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::map<Partition, std::map<Partition, Rational>> table;
    for (const Partition& lam : partitions_of(degree)) {
        std::map<Partition, Rational> row{{Partition(), Rational(1)}};
        for (int part : lam.parts()) row = m_times_pr(row, part);
        table[lam] = std::move(row);
    }
    return cache.emplace(degree, std::move(table)).first->second;
}

const std::map<Partition, SymFunc>& m_in_p_table(int degree) {
    static std::map<int, std::map<Partition, SymFunc>> cache;
    const auto& p2m = p_to_m_table(degree);
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    // p_lambda = sum over mu >= lambda (dominance, hence earlier in the
    // canonical order) of p2m[lambda][mu] m_mu, diagonal nonzero: solve by
    // forward substitution in canonical order.
    std::map<Partition, SymFunc> table;
    for (const Partition& lam : partitions_of(degree)) {
        SymFunc m_lam = SymFunc::p_term(lam);
        const auto& row = p2m.at(lam);
        Rational diag = 0;
        for (const auto& [mu, c] : row) {
            if (mu == lam) {
                diag = c;
            } else {
                m_lam = m_lam - c * table.at(mu);
            }
        }
        table[lam] = Rational(1) / diag * m_lam;
    }
    return cache.emplace(degree, std::move(table)).first->second;
}

const std::map<Partition, SymFunc>& s_in_p_table(int degree) {
    static std::map<int, std::map<Partition, SymFunc>> cache;
    const auto& m2p = m_in_p_table(degree);
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;

    std::map<Partition, SymFunc> table;
    const auto parts = partitions_of(degree);
    for (const Partition& lam : parts) {
        SymFunc s_lam;
        SkewDiagram straight(lam, Partition());
        for (const Partition& mu : parts) {
            const Integer k = kostka(straight, mu);
            if (k != 0) s_lam = s_lam + Rational(k) * m2p.at(mu);
        }
        table[lam] = std::move(s_lam);
    }
    return cache.emplace(degree, std::move(table)).first->second;
}

}  // namespace detail

SymFunc from_basis(BasisName b, const Partition& lambda) {
    switch (b) {
        case BasisName::p:
            return SymFunc::p_term(lambda);
        case BasisName::h: {
            SymFunc f = SymFunc::constant(1);
            for (int r : lambda.parts()) {
                SymFunc hr;
                for (const Partition& mu : partitions_of(r))
                    hr.add_term(mu, Rational(1) / Rational(z(mu)));
                f = f * hr;
            }
            return f;
        }
        case BasisName::e:
            return omega(from_basis(BasisName::h, lambda));
        case BasisName::m:
            return detail::m_in_p_table(lambda.size()).at(lambda);
        case BasisName::s:
            return detail::s_in_p_table(lambda.size()).at(lambda);
    }
    throw std::logic_error("unreachable basis");
}

SymFunc skew_schur(const SkewDiagram& d) {
    SymFunc f;
    for (const auto& [nu, c] : lr_expand(d))
        f = f + Rational(c) * from_basis(BasisName::s, nu);
    return f;
}

std::map<Partition, Rational> to_basis(const SymFunc& f, BasisName b) {
    std::map<Partition, Rational> out;
    if (f.is_zero()) return out;
    switch (b) {
        case BasisName::p:
            return f.terms();
        case BasisName::m: {
            // Expand each p_lambda through the p->m table directly.
            for (const auto& [lam, c] : f.terms()) {
                for (const auto& [mu, t] : detail::p_to_m_table(lam.size()).at(lam)) {
                    auto [it, inserted] = out.emplace(mu, c * t);
                    if (!inserted) it->second += c * t;
                }
            }
            break;
        }
        case BasisName::h:
        case BasisName::s:
        case BasisName::e: {
            // h is dual to m, s is self-dual; e coefficients are the h
            // coefficients of omega(f).
            const SymFunc g = b == BasisName::e ? omega(f) : f;
            std::vector<int> degrees;
            for (const auto& [lam, c] : g.terms())
                if (degrees.empty() || degrees.back() != lam.size()) degrees.push_back(lam.size());
            for (int n : degrees) {
                for (const Partition& lam : partitions_of(n)) {
                    const SymFunc& dual = b == BasisName::s
                                              ? detail::s_in_p_table(n).at(lam)
                                              : detail::m_in_p_table(n).at(lam);
                    const Rational c = scalar_product(g, dual);
                    if (c != 0) out[lam] = c;
                }
            }
            break;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<std::vector<int>, Rational> expand_in_variables(const SymFunc& f, int k) {
    if (k < 1) throw std::domain_error("expand_in_variables requires k >= 1");
    std::map<std::vector<int>, Rational> poly;
    for (const auto& [lam, c] : to_basis(f, BasisName::m)) {
        if (lam.length() > k) continue;
        std::vector<int> exps(static_cast<size_t>(k), 0);
        std::copy(lam.parts().begin(), lam.parts().end(), exps.begin());
        // exps starts sorted descending; prev_permutation walks every
        // distinct rearrangement exactly once.
        do {
            auto [it, inserted] = poly.emplace(exps, c);
            if (!inserted) it->second += c;
        } while (std::prev_permutation(exps.begin(), exps.end()));
    }
    for (auto it = poly.begin(); it != poly.end();)
        it = it->second == 0 ? poly.erase(it) : std::next(it);
    return poly;
}

nlohmann::json symfunc_to_json(const SymFunc& f, BasisName b) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lam, c] : to_basis(f, b)) {
        terms.push_back({{"partition", lam.parts()}, {"coeff", rational_to_string(c)}});
    }
    return {{"basis", std::string(1, basis_letter(b))}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
    const std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw std::domain_error("symfunc json: bad basis field");
    const BasisName basis = basis_from_letter(b[0]);
    SymFunc f;
    for (const auto& term : j.at("terms")) {
        const Partition lam(term.at("partition").get<std::vector<int>>());
        const Rational c = rational_from_string(term.at("coeff").get<std::string>());
        f = f + c * from_basis(basis, lam);
    }
    return f;
}

}  // namespace chromsym
