#include "frobenius/families.hpp"

#include <array>
#include <numeric>

#include "frobenius/error.hpp"
#include "frobenius/semigroup.hpp"
#include "parallel.hpp"

namespace frobenius {

namespace {

Amount ceil_div(Amount num, Amount den) { return (num + den - 1) / den; }

struct RefRow {
    Amount first;
    Amount last;
    Amount w;
    Amount r;
};

struct RefTable {
    std::vector<Amount> denoms;
    Amount offset;
    std::vector<RefRow> rows;
};

// Piecewise displays for (1,11,14), (1,4,11,17) and (1,5,9), row by row.
const RefTable& ref_table(FamilyId id)
{
    static const RefTable t_1_11_14{{1, 11, 14},
                                    42,
                                    {{0, 1, 43, 587},
                                     {2, 2, 43, 589},
                                     {3, 3, 43, 590},
                                     {4, 4, 44, 591},
                                     {5, 6, 44, 592},
                                     {7, 7, 44, 594},
                                     {8, 9, 44, 595},
                                     {10, 10, 44, 597},
                                     {11, 12, 44, 598},
                                     {13, 13, 44, 600}}};
    static const RefTable t_1_4_11_17{{1, 4, 11, 17},
                                      9,
                                      {{0, 2, 11, 150},
                                       {3, 3, 11, 155},
                                       {4, 6, 11, 156},
                                       {7, 7, 11, 159},
                                       {8, 13, 12, 160},
                                       {14, 14, 12, 166},
                                       {15, 16, 12, 167}}};
    static const RefTable t_1_5_9{{1, 5, 9}, 3, {{0, 3, 6, 26}, {4, 4, 6, 30}, {5, 8, 7, 31}}};
    switch (id) {
    case FamilyId::ref_1_11_14:
        return t_1_11_14;
    case FamilyId::ref_1_4_11_17:
        return t_1_4_11_17;
    case FamilyId::ref_1_5_9:
        return t_1_5_9;
    default:
        throw PreconditionError("not a reference family");
    }
}

constexpr std::array<Amount, 17> kGamma4_8_15_17{2, 3, 2, 3, 2, 3, 2, 3, 2, 3, 3, 3, 3, 3, 3, 3, 3};

bool is_reference(FamilyId id)
{
    return id == FamilyId::ref_1_11_14 || id == FamilyId::ref_1_4_11_17 || id == FamilyId::ref_1_5_9;
}

std::vector<Amount> one_to(Amount k)
{
    std::vector<Amount> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

} // namespace

std::string to_string(FamilyId id)
{
    switch (id) {
    case FamilyId::selmer_1k:
        return "SELMER_1K";
    case FamilyId::f_12b_b1:
        return "F_12B_B1";
    case FamilyId::f_12b_b1_2b:
        return "F_12B_B1_2B";
    case FamilyId::f_1b_2bm1:
        return "F_1B_2BM1";
    case FamilyId::f_12k_k:
        return "F_12K_K";
    case FamilyId::f_4_8_15_17:
        return "F_4_8_15_17";
    case FamilyId::ref_1_11_14:
        return "REF_1_11_14";
    case FamilyId::ref_1_4_11_17:
        return "REF_1_4_11_17";
    case FamilyId::ref_1_5_9:
        return "REF_1_5_9";
    }
    return "UNKNOWN";
}

FamilyId parse_family_id(const std::string& text)
{
    for (FamilyId id : {FamilyId::selmer_1k, FamilyId::f_12b_b1, FamilyId::f_12b_b1_2b, FamilyId::f_1b_2bm1,
                        FamilyId::f_12k_k, FamilyId::f_4_8_15_17, FamilyId::ref_1_11_14,
                        FamilyId::ref_1_4_11_17, FamilyId::ref_1_5_9}) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw PreconditionError("unknown family '" + text + "'");
}

FamilyFormula FamilyFormula::selmer(Amount k)
{
    if (k < 2) {
        throw FamilyDomainError("SELMER_1K needs k >= 2");
    }
    FamilyFormula f(FamilyId::selmer_1k, CoinSystem(one_to(k)));
    f.k_ = k;
    return f;
}

FamilyFormula FamilyFormula::one_two_b_b1(Amount b)
{
    if (b < 4) {
        throw FamilyDomainError("F_12B_B1 needs b >= 4");
    }
    FamilyFormula f(FamilyId::f_12b_b1, CoinSystem{1, 2, b, b + 1});
    f.b_ = b;
    return f;
}

FamilyFormula FamilyFormula::one_two_b_b1_2b(Amount b)
{
    if (b < 4) {
        throw FamilyDomainError("F_12B_B1_2B needs b >= 4");
    }
    FamilyFormula f(FamilyId::f_12b_b1_2b, CoinSystem{1, 2, b, b + 1, 2 * b});
    f.b_ = b;
    return f;
}

FamilyFormula FamilyFormula::one_b_2bm1(Amount b)
{
    if (b < 3) {
        throw FamilyDomainError("F_1B_2BM1 needs b >= 3");
    }
    FamilyFormula f(FamilyId::f_1b_2bm1, CoinSystem{1, b, 2 * b - 1});
    f.b_ = b;
    return f;
}

FamilyFormula FamilyFormula::one_to_k_plus(Amount k, Amount big_k)
{
    if (k < 2 || big_k - 1 <= k) {
        throw FamilyDomainError("F_12K_K needs K - 1 > k >= 2");
    }
    std::vector<Amount> denoms = one_to(k);
    denoms.push_back(big_k);
    FamilyFormula f(FamilyId::f_12k_k, CoinSystem(std::move(denoms)));
    f.k_ = k;
    f.big_k_ = big_k;
    f.s_ = big_k / k;
    f.t_ = big_k % k;
    return f;
}

FamilyFormula FamilyFormula::four_8_15_17()
{
    return FamilyFormula(FamilyId::f_4_8_15_17, CoinSystem{4, 8, 15, 17});
}

FamilyFormula FamilyFormula::reference(FamilyId id)
{
    return FamilyFormula(id, CoinSystem(ref_table(id).denoms));
}

Amount FamilyFormula::period() const
{
    switch (id_) {
    case FamilyId::selmer_1k:
        return k_;
    case FamilyId::f_12b_b1:
        return b_ + 1;
    case FamilyId::f_12b_b1_2b:
        return 2 * b_;
    case FamilyId::f_1b_2bm1:
        return 2 * b_ - 1;
    case FamilyId::f_12k_k:
        return big_k_;
    default:
        return system_.largest();
    }
}

Amount FamilyFormula::a_min() const
{
    switch (id_) {
    case FamilyId::selmer_1k:
        return 2;
    case FamilyId::f_12b_b1:
        return b_ % 2 ? (b_ - 3) * (b_ + 1) * (b_ + 1) / 2 : (b_ - 2) * (b_ + 1) * (b_ + 1) / 2;
    case FamilyId::f_12b_b1_2b:
        return b_ % 2 ? b_ * (b_ - 1) : b_ * (b_ - 2);
    case FamilyId::f_1b_2bm1:
        return 2 * b_ * b_ - 5 * b_ + 2;
    case FamilyId::f_12k_k:
        return t_ >= 2 ? s_ * big_k_ : (s_ - 1) * big_k_;
    case FamilyId::f_4_8_15_17:
        return 90;
    default:
        return ref_table(id_).offset * system_.largest();
    }
}

Amount FamilyFormula::h_min(Amount d) const
{
    switch (id_) {
    case FamilyId::selmer_1k:
        return 1;
    case FamilyId::f_12b_b1:
        return b_ % 2 ? ceil_div(2 * d, (b_ - 3) * (b_ + 1)) : ceil_div(2 * d, (b_ - 2) * (b_ + 1));
    case FamilyId::f_12b_b1_2b:
        return b_ % 2 ? ceil_div(2 * d, b_ - 1) : ceil_div(2 * d, b_ - 2);
    case FamilyId::f_1b_2bm1:
        return ceil_div(d, b_ - 2);
    case FamilyId::f_12k_k:
        return t_ >= 2 ? ceil_div(d, s_) : ceil_div(d, s_ - 1);
    case FamilyId::f_4_8_15_17:
        return ceil_div(17 * d, 90);
    default:
        return ceil_div(d, ref_table(id_).offset);
    }
}

std::optional<std::string> FamilyFormula::domain_violation(Amount a, Amount h, Amount d) const
{
    if (a < 1 || h < 1 || d < 1) {
        return "a, h, d must be positive";
    }
    if (std::gcd(a, d) != 1) {
        return "gcd(a, d) = 1";
    }
    if (a < a_min()) {
        return "a >= " + std::to_string(a_min());
    }
    if (h < h_min(d)) {
        return "h >= " + std::to_string(h_min(d));
    }
    return std::nullopt;
}

std::optional<CongruenceFormula> FamilyFormula::reference_table() const
{
    if (!is_reference(id_)) {
        return std::nullopt;
    }
    const RefTable& t = ref_table(id_);
    CongruenceFormula f;
    f.denoms = t.denoms;
    f.modulus = t.denoms.back();
    f.offset = t.offset;
    f.a_min_paper = t.offset * f.modulus;
    f.h_min_rule = f.a_min_paper;
    f.path = id_ == FamilyId::ref_1_5_9 ? FormulaPath::orderly : FormulaPath::general_unit;
    for (const RefRow& row : t.rows) {
        for (Amount j = row.first; j <= row.last; j++) {
            f.entries.push_back(FormulaEntry{j, row.w, row.r});
        }
    }
    return f;
}

namespace {

Amount eval_12k_k(const FamilyFormula& f, bool t_at_least_2, Amount a, Amount h, Amount d)
{
    const Amount K = f.big_k();
    const Amount k = f.k();
    const Amount s = f.s();
    const Amount j = a % K;
    const Amount q = a / K;
    // The t <= 1 body is the t >= 2 body with s lowered by one.
    const Amount level = t_at_least_2 ? s : s - 1;
    if (j <= (level - 1) * k + 1) {
        return (q + level) * h * a + K * d * q - a - d;
    }
    if (j <= level * k + 1) {
        return (q + level) * h * a + K * d * q - a + (j - 1) * d;
    }
    return (q + level + 1) * h * a + K * d * q - a + (j - 1) * d;
}

Amount eval_unchecked(const FamilyFormula& f, Amount a, Amount h, Amount d)
{
    switch (f.id()) {
    case FamilyId::selmer_1k:
        return h * a * ((a - 2) / f.k() + 1) + (d - 1) * (a - 1) - 1;

    case FamilyId::f_12b_b1: {
        const Amount m = f.b() + 1;
        const Amount j = a % m;
        const Amount base = (a / m) * (h * a + m * d) + (j - 1) * d;
        return j <= 1 ? base - a : base + (h - 1) * a;
    }

    case FamilyId::f_12b_b1_2b: {
        const Amount b = f.b();
        const Amount m = 2 * b;
        const Amount j = a % m;
        const Amount q = a / m;
        const Amount common = m * d * q - a;
        if (b % 2 == 0) {
            const Amount lo = (q + b / 2 - 1) * h * a + common;
            const Amount hi = (q + b / 2) * h * a + common;
            if (j <= b - 3) {
                return lo - d;
            }
            if (j == b - 2) {
                return lo + b * d - 3 * d;
            }
            if (j == b - 1) {
                return lo + b * d - 2 * d;
            }
            if (j <= 2 * b - 2) {
                return hi + b * d - d;
            }
            return hi + 2 * b * d - 2 * d;
        }
        const Amount lead = (q + (b - 1) / 2) * h * a + common;
        if (j <= b - 2) {
            return lead - d;
        }
        if (j == b - 1) {
            return lead + b * d - 2 * d;
        }
        if (j <= 2 * b - 3) {
            return lead + b * d - d;
        }
        if (j == 2 * b - 2) {
            return lead + 2 * b * d - 3 * d;
        }
        return lead + 2 * b * d - 2 * d;
    }

    case FamilyId::f_1b_2bm1: {
        const Amount b = f.b();
        const Amount m = 2 * b - 1;
        const Amount j = a % m;
        const Amount q = a / m;
        if (j <= b - 2) {
            return (q + b - 2) * h * a + m * d * q - a - d;
        }
        if (j == b - 1) {
            return (q + b - 2) * h * a + m * d * q - a + (b - 2) * d;
        }
        return (q + b - 1) * h * a + m * d * q - a + (b - 1) * d;
    }

    case FamilyId::f_12k_k:
        return eval_12k_k(f, f.t() >= 2, a, h, d);

    case FamilyId::f_4_8_15_17: {
        const Amount j = a % 17;
        return (kGamma4_8_15_17[static_cast<std::size_t>(j)] * h - 1) * a + (26 + j) * d + (h * a + 17 * d) * (a / 17);
    }

    default: {
        const RefTable& t = ref_table(f.id());
        const Amount m = t.denoms.back();
        const Amount j = a % m;
        for (const RefRow& row : t.rows) {
            if (j >= row.first && j <= row.last) {
                return (row.w * h - 1) * a + row.r * d + (h * a + m * d) * (a / m - t.offset);
            }
        }
        throw std::logic_error("reference table misses a residue");
    }
    }
}

} // namespace

Amount family_eval(const FamilyFormula& family, Amount a, Amount h, Amount d)
{
    if (auto failed = family.domain_violation(a, h, d)) {
        throw FamilyDomainError(to_string(family.id()) + ": hypothesis failed: " + *failed);
    }
    return eval_unchecked(family, a, h, d);
}

Amount family_eval_branch(const FamilyFormula& family, KBranch branch, Amount a, Amount h, Amount d)
{
    if (family.id() != FamilyId::f_12k_k) {
        throw PreconditionError("branch selection applies to F_12K_K only");
    }
    if (branch == KBranch::automatic) {
        return family_eval(family, a, h, d);
    }
    if (a < 1 || h < 1 || d < 1) {
        throw FamilyDomainError("a, h, d must be positive");
    }
    return eval_12k_k(family, branch == KBranch::t_at_least_2, a, h, d);
}

FamilyGrid FamilyGrid::periods(const FamilyFormula& family, Amount periods, std::vector<Amount> d_values)
{
    FamilyGrid grid;
    grid.a_lo = family.a_min();
    grid.a_hi = family.a_min() + periods * family.period() - 1;
    grid.h_values = {0};
    grid.h_relative = true;
    grid.d_values = std::move(d_values);
    return grid;
}

namespace {

struct GridPoint {
    Amount a;
    Amount h;
    Amount d;
};

template <class Loop>
CrossCheckReport cross_check_with(const FamilyFormula& family, const FamilyGrid& grid, Loop loop)
{
    std::vector<GridPoint> points;
    for (Amount d : grid.d_values) {
        for (Amount hv : grid.h_values) {
            const Amount h = grid.h_relative ? family.h_min(d) + hv : hv;
            for (Amount a = grid.a_lo; a <= grid.a_hi; a++) {
                points.push_back(GridPoint{a, h, d});
            }
        }
    }

    std::optional<CongruenceFormula> synth;
    if (family.system().unit_leading() && family.system().size() >= 2) {
        synth = synthesize(family.system());
    }

    struct Outcome {
        bool in_domain = false;
        bool synth_compared = false;
        std::optional<CrossCheckMismatch> mismatch;
    };
    std::vector<Outcome> outcomes(points.size());
    loop(static_cast<std::int64_t>(points.size()), [&](std::int64_t i) {
        const GridPoint& p = points[static_cast<std::size_t>(i)];
        Outcome& out = outcomes[static_cast<std::size_t>(i)];
        if (family.domain_violation(p.a, p.h, p.d)) {
            return;
        }
        out.in_domain = true;
        const Amount value = family_eval(family, p.a, p.h, p.d);
        const Instance instance(p.a, p.h, p.d, family.system());
        const Amount oracle = frobenius_cross_checked(instance.generators());
        std::optional<Amount> synth_value;
        if (synth && p.a >= synth->a_min_paper && p.h >= synth->h_min(p.d)) {
            synth_value = evaluate(*synth, p.a, p.h, p.d);
            out.synth_compared = true;
        }
        if (value != oracle || (synth_value && *synth_value != oracle)) {
            out.mismatch = CrossCheckMismatch{p.a, p.h, p.d, value, oracle, synth_value};
        }
    });

    CrossCheckReport report;
    report.points = points.size();
    for (const Outcome& o : outcomes) {
        report.in_domain += o.in_domain ? 1 : 0;
        report.synth_compared += o.synth_compared ? 1 : 0;
        if (o.mismatch) {
            report.mismatches.push_back(*o.mismatch);
        }
    }
    return report;
}

} // namespace

CrossCheckReport cross_check(const FamilyFormula& family, const FamilyGrid& grid)
{
    return cross_check_with(family, grid, [](std::int64_t n, auto&& fn) { detail::parallel_for(n, fn); });
}

CrossCheckReport cross_check_serial(const FamilyFormula& family, const FamilyGrid& grid)
{
    return cross_check_with(family, grid, [](std::int64_t n, auto&& fn) { detail::serial_for(n, fn); });
}

} // namespace frobenius
