#include "hypdiv/reidtai.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hypdiv {

std::string to_string(ActionVerdict v) {
    switch (v) {
        case ActionVerdict::Identity: return "Identity";
        case ActionVerdict::Quasireflection: return "Quasireflection";
        case ActionVerdict::Junior: return "Junior";
        case ActionVerdict::Senior: return "Senior";
    }
    throw std::logic_error("unreachable verdict");
}

AutomorphismAction AutomorphismAction::make(int order, const std::vector<int>& raw_exponents) {
    if (order < 1) throw std::invalid_argument("action order must be positive");
    AutomorphismAction a;
    a.order = order;
    a.exponents.reserve(raw_exponents.size());
    for (int e : raw_exponents) {
        int r = e % order;
        if (r < 0) r += order;
        a.exponents.push_back(r);
    }
    return a;
}

Rational age(const AutomorphismAction& action, int k) {
    const int m = action.order;
    int kk = k % m;
    if (kk < 0) kk += m;
    if (std::gcd(kk, m) != 1) throw std::invalid_argument("k is not a unit mod the action order");
    long sum = 0;
    for (int a : action.exponents) {
        sum += (static_cast<long>(kk) * a) % m;
    }
    return frac(sum, m);
}

std::vector<int> units_mod(int m) {
    std::vector<int> out;
    if (m == 1) {
        out.push_back(0);
        return out;
    }
    for (int k = 1; k < m; ++k) {
        if (std::gcd(k, m) == 1) out.push_back(k);
    }
    return out;
}

ActionClassification seniority(const AutomorphismAction& action) {
    size_t nonzero = 0;
    for (int a : action.exponents) {
        if (a != 0) ++nonzero;
    }

    Rational min_age(0);
    bool first = true;
    for (int k : units_mod(action.order)) {
        Rational a = age(action, k);
        if (first || a < min_age) min_age = a;
        first = false;
    }

    ActionClassification out;
    out.minimal_age = min_age;
    if (nonzero == 0) {
        out.verdict = ActionVerdict::Identity;
    } else if (nonzero == 1) {
        out.verdict = ActionVerdict::Quasireflection;
    } else {
        out.verdict = min_age >= 1 ? ActionVerdict::Senior : ActionVerdict::Junior;
    }
    return out;
}

AutomorphismAction smooth_hyperelliptic_action(int g, int m) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (m < 1 || m > 2 * g + 2)
        throw std::invalid_argument("rotation order out of range 1.." + std::to_string(2 * g + 2));
    std::vector<int> exponents;
    exponents.reserve(static_cast<size_t>(2 * g - 1));
    for (int k = 2; k <= 2 * g; ++k) exponents.push_back(k);
    return AutomorphismAction::make(m, exponents);
}

ActionClassification classify_smooth_hyperelliptic_action(int g, int m) {
    return seniority(smooth_hyperelliptic_action(g, m));
}

bool canonical_singularity_verdict(const std::vector<AutomorphismAction>& actions) {
    bool all_senior = true;
    for (const auto& action : actions) {
        ActionClassification c = seniority(action);
        if (c.verdict == ActionVerdict::Quasireflection) {
            throw std::invalid_argument(
                "quasireflection present: the criterion applies only to groups without "
                "quasireflections (reduce by the quasireflection subgroup first)");
        }
        if (c.verdict != ActionVerdict::Senior) all_senior = false;
    }
    return all_senior;
}

}  // namespace hypdiv
