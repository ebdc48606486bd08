#pragma once

#include "equimetric/affine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace equimetric {

enum class PairKind { TriangleTriangle, TriangleParallelogram };

inline const char* to_string(PairKind k) {
    return k == PairKind::TriangleTriangle ? "TriangleTriangle" : "TriangleParallelogram";
}

/// One equal-perimeter, equal-area pair found by the brute-force search.
struct PairRecord {
    SideTriple sides1;
    std::optional<SideTriple> sides2;        // triangle partner
    std::optional<Parallelogram> para2;      // parallelogram partner
    Rat perimeter;
    Rat area16sq;
    PairKind kind;
    bool similarity_class_distinct;
};

struct SearchConfig {
    int64_t max_perimeter = 0;
    PairKind kind = PairKind::TriangleTriangle;
    bool dedup = false;
    int threads = 1;
    std::string out;  // JSON-lines path; empty keeps results in memory only
};

namespace detail {

inline bool is_square_i64(int64_t n, int64_t* root = nullptr) {
    if (n < 0)
        return false;
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    if (r * r != n)
        return false;
    if (root)
        *root = r;
    return true;
}

// 16 A^2 stays within int64 for perimeters up to ~55000; enforce a margin.
constexpr int64_t kMaxOraclePerimeter = 50000;

inline void require_perimeter_bound(int64_t maxp) {
    if (maxp < 3)
        throw std::invalid_argument("oracle: max_perimeter must be >= 3");
    if (maxp > kMaxOraclePerimeter)
        throw std::invalid_argument("oracle: max_perimeter exceeds the exact-int64 range");
}

}  // namespace detail

/// Streams every integer Heron triple a <= b <= c with perimeter at most the
/// bound, in lexicographic order, together with its 16*area^2 value.
inline void enumerate_heron_ints(
    int64_t max_perimeter,
    const std::function<void(int64_t, int64_t, int64_t, int64_t)>& emit) {
    detail::require_perimeter_bound(max_perimeter);
    for (int64_t a = 1; 3 * a <= max_perimeter; ++a)
        for (int64_t b = a; a + 2 * b <= max_perimeter; ++b)
            for (int64_t c = b; c < a + b && a + b + c <= max_perimeter; ++c) {
                int64_t u = a + b + c;
                int64_t key = u * (u - 2 * a) * (u - 2 * b) * (u - 2 * c);
                if (key > 0 && detail::is_square_i64(key))
                    emit(a, b, c, key);
            }
}

inline std::vector<SideTriple> enumerate_heron(int64_t max_perimeter) {
    std::vector<SideTriple> out;
    enumerate_heron_ints(max_perimeter, [&](int64_t a, int64_t b, int64_t c, int64_t) {
        out.emplace_back(Rat(a), Rat(b), Rat(c));
    });
    return out;
}

namespace detail {

struct IntTriple {
    int64_t a, b, c, key;
};

inline std::vector<IntTriple> heron_with_perimeter(int64_t P) {
    std::vector<IntTriple> out;
    for (int64_t a = 1; 3 * a <= P; ++a)
        for (int64_t b = a; a + 2 * b <= P; ++b) {
            int64_t c = P - a - b;
            if (c < b || c >= a + b)
                continue;
            int64_t key = P * (P - 2 * a) * (P - 2 * b) * (P - 2 * c);
            if (key > 0 && is_square_i64(key))
                out.push_back({a, b, c, key});
        }
    return out;
}

struct IntPara {
    int64_t base, offset, height, side, key;  // key = 16 (base*height)^2
};

inline std::vector<IntPara> parallelograms_with_perimeter(int64_t P) {
    std::vector<IntPara> out;
    if (P % 2 != 0)
        return out;
    int64_t half = P / 2;
    for (int64_t base = 1; base < half; ++base) {
        int64_t g = half - base;
        auto push = [&](int64_t x, int64_t h) {
            int64_t area = base * h;
            out.push_back({base, x, h, g, 16 * area * area});
        };
        push(0, g);  // rectangle
        for (int64_t x = 1; x < g; ++x) {
            int64_t h = 0;
            if (is_square_i64(g * g - x * x, &h) && h >= 1)
                push(x, h);
        }
    }
    return out;
}

inline void primitive3(int64_t& a, int64_t& b, int64_t& c) {
    int64_t g = std::gcd(std::gcd(a, b), c);
    a /= g; b /= g; c /= g;
}

}  // namespace detail

/// All unordered pairs sharing (perimeter, 16*area^2) up to the perimeter
/// bound. With dedup, one representative per unordered similarity-class pair
/// is kept (the first in sorted order). Workers split the perimeter range;
/// the merged output is fully sorted, so thread count never changes it.
inline std::vector<PairRecord> find_pairs(const SearchConfig& cfg) {
    detail::require_perimeter_bound(cfg.max_perimeter);
    int threads = std::max(1, cfg.threads);

    std::vector<std::vector<PairRecord>> parts(static_cast<size_t>(threads));
    auto worker = [&](int w) {
        auto& mine = parts[static_cast<size_t>(w)];
        for (int64_t P = 3 + w; P <= cfg.max_perimeter; P += threads) {
            auto triples = detail::heron_with_perimeter(P);
            if (cfg.kind == PairKind::TriangleTriangle) {
                if (triples.size() < 2)
                    continue;
                std::map<int64_t, std::vector<size_t>> buckets;
                for (size_t i = 0; i < triples.size(); ++i)
                    buckets[triples[i].key].push_back(i);
                for (const auto& [key, idx] : buckets)
                    for (size_t i = 0; i < idx.size(); ++i)
                        for (size_t j = i + 1; j < idx.size(); ++j) {
                            const auto& t1 = triples[idx[i]];
                            const auto& t2 = triples[idx[j]];
                            SideTriple s1(Rat(t1.a), Rat(t1.b), Rat(t1.c));
                            SideTriple s2(Rat(t2.a), Rat(t2.b), Rat(t2.c));
                            mine.push_back({s1, s2, std::nullopt, Rat(P), Rat(key),
                                            PairKind::TriangleTriangle, !similar(s1, s2)});
                        }
            } else {
                if (triples.empty())
                    continue;
                auto paras = detail::parallelograms_with_perimeter(P);
                if (paras.empty())
                    continue;
                std::map<int64_t, std::vector<size_t>> buckets;
                for (size_t i = 0; i < triples.size(); ++i)
                    buckets[triples[i].key].push_back(i);
                for (const auto& para : paras) {
                    auto it = buckets.find(para.key);
                    if (it == buckets.end())
                        continue;
                    for (size_t i : it->second) {
                        const auto& t = triples[i];
                        SideTriple s1(Rat(t.a), Rat(t.b), Rat(t.c));
                        mine.push_back({s1, std::nullopt,
                                        Parallelogram(Rat(para.base), Rat(para.offset),
                                                      Rat(para.height)),
                                        Rat(P), Rat(t.key), PairKind::TriangleParallelogram,
                                        true});
                    }
                }
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back(worker, w);
        for (auto& th : pool)
            th.join();
    }

    std::vector<PairRecord> all;
    for (auto& part : parts)
        for (auto& rec : part)
            all.push_back(std::move(rec));
    std::sort(all.begin(), all.end(), [](const PairRecord& x, const PairRecord& y) {
        if (x.perimeter != y.perimeter)
            return x.perimeter < y.perimeter;
        if (!(x.sides1 == y.sides1))
            return x.sides1 < y.sides1;
        if (x.sides2 && y.sides2 && !(*x.sides2 == *y.sides2))
            return *x.sides2 < *y.sides2;
        auto para_key = [](const PairRecord& r) {
            return r.para2 ? std::array<Rat, 3>{r.para2->base, r.para2->sx, r.para2->sy}
                           : std::array<Rat, 3>{Rat(0), Rat(0), Rat(0)};
        };
        return para_key(x) < para_key(y);
    });

    // every record re-verifies at emission time
    for (const PairRecord& rec : all) {
        if (rec.sides2 && !weakly_equivalent(rec.sides1, *rec.sides2))
            throw std::logic_error("find_pairs: emitted pair fails weak equivalence");
        if (rec.para2 && (rec.para2->perimeter() != perimeter(rec.sides1) ||
                          Rat(16) * sq(rec.para2->area()) != heron_area_sq16(rec.sides1)))
            throw std::logic_error("find_pairs: emitted parallelogram pair fails equality");
    }

    if (!cfg.dedup)
        return all;
    std::vector<PairRecord> kept;
    std::vector<std::string> seen;
    for (auto& rec : all) {
        auto class_key = [](const SideTriple& s) {
            return (s[1] / s[0]).str() + "|" + (s[2] / s[0]).str();
        };
        std::string key;
        if (rec.sides2) {
            std::string k1 = class_key(rec.sides1), k2 = class_key(*rec.sides2);
            key = k1 <= k2 ? k1 + "#" + k2 : k2 + "#" + k1;
        } else {
            int64_t e = rec.para2->base.num().get_si();
            int64_t x = rec.para2->sx.num().get_si();
            int64_t h = rec.para2->sy.num().get_si();
            int64_t g = std::gcd(std::gcd(e, x), h);
            key = class_key(rec.sides1) + "#P" + std::to_string(e / g) + "," +
                  std::to_string(x / g) + "," + std::to_string(h / g);
        }
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            kept.push_back(std::move(rec));
        }
    }
    return kept;
}

/// Primitive integer placements (r, s, t) with gcd 1 and coordinates up to
/// the bound such that both T and f(T) have rational sides and are weakly
/// equivalent. The predicate is invariant under scaling, so primitive integer
/// representatives cover every similarity class in range; output is
/// deduplicated by class. The identity is rejected: every triangle satisfies
/// it trivially.
inline std::vector<Triangle> conjecture27_experiment(const TransformMatrix& f, int64_t height) {
    if (f.is_identity())
        throw std::invalid_argument("conjecture27_experiment: f must differ from the identity");
    if (height < 1)
        throw std::invalid_argument("conjecture27_experiment: height must be >= 1");
    std::vector<Triangle> found;
    std::vector<std::string> classes;
    for (int64_t r = 1; r <= height; ++r)
        for (int64_t s = 0; s <= height; ++s)
            for (int64_t t = 1; t <= height; ++t) {
                if (std::gcd(std::gcd(r, s), t) != 1)
                    continue;
                if (!detail::is_square_i64(s * s + t * t) ||
                    !detail::is_square_i64((s - r) * (s - r) + t * t))
                    continue;
                Triangle tri{Rat(r), Rat(s), Rat(t)};
                auto side_src = sides(tri);
                if (!side_src)
                    continue;
                auto image = try_apply(f, tri);
                if (!image)
                    continue;
                auto side_img = sides(*image);
                if (!side_img || !weakly_equivalent(*side_src, *side_img))
                    continue;
                std::string key = ((*side_src)[1] / (*side_src)[0]).str() + "|" +
                                  ((*side_src)[2] / (*side_src)[0]).str();
                if (std::find(classes.begin(), classes.end(), key) == classes.end()) {
                    classes.push_back(key);
                    found.push_back(tri);
                }
            }
    return found;
}

/// All residual-zero (a, b) of height at most the bound for the given system
/// on a fixed rational-sided placement. The two forced solutions (1, 0) and
/// (1, (r-2s)/t) are always tested and included when they verify, whatever
/// their height.
inline std::vector<SolutionTuple> grid_solution_search(DioSystem system, const Triangle& tri,
                                                       int64_t height) {
    if (!sides(tri))
        throw std::domain_error("grid_solution_search: triangle sides must be rational");
    if (height < 1)
        throw std::invalid_argument("grid_solution_search: height must be >= 1");
    std::vector<SolutionTuple> hits;
    auto consider = [&](const Rat& a, const Rat& b) {
        if (auto tuple = try_make_solution(system, a, b, tri.r, tri.s, tri.t)) {
            for (const auto& seen : hits)
                if (seen.a == a && seen.b == b)
                    return;
            hits.push_back(*tuple);
        }
    };
    for (int64_t an = 1; an <= height; ++an)
        for (int64_t ad = 1; ad <= height; ++ad) {
            if (std::gcd(an, ad) != 1)
                continue;
            Rat a(an, ad);
            consider(a, Rat(0));
            for (int64_t bn = 1; bn <= height; ++bn)
                for (int64_t bd = 1; bd <= height; ++bd) {
                    if (std::gcd(bn, bd) != 1)
                        continue;
                    consider(a, Rat(bn, bd));
                    consider(a, Rat(-bn, bd));
                }
        }
    consider(Rat(1), Rat(0));
    consider(Rat(1), (tri.r - Rat(2) * tri.s) / tri.t);
    std::sort(hits.begin(), hits.end(), [](const SolutionTuple& x, const SolutionTuple& y) {
        if (x.a != y.a)
            return x.a < y.a;
        return x.b < y.b;
    });
    return hits;
}

/// Obstruction predicate from the scalene-pair existence result: true when
/// the sides satisfy, in some order, the quartic
///   x^4 - x^3 y - 2x^3 z + 3x^2 yz - xy^3 + 3xy^2 z - 6xyz^2 + 3xz^3
///   + y^4 - 2y^3 z + 3yz^3 - 2z^4 = 0.
/// Used only to annotate search output.
inline bool choudhry_obstruction(const SideTriple& sides) {
    auto poly = [](const Rat& x, const Rat& y, const Rat& z) {
        return pow_ui(x, 4) - pow_ui(x, 3) * y - Rat(2) * pow_ui(x, 3) * z +
               Rat(3) * sq(x) * y * z - x * pow_ui(y, 3) + Rat(3) * x * sq(y) * z -
               Rat(6) * x * y * sq(z) + Rat(3) * x * pow_ui(z, 3) + pow_ui(y, 4) -
               Rat(2) * pow_ui(y, 3) * z + Rat(3) * y * pow_ui(z, 3) - Rat(2) * pow_ui(z, 4);
    };
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        if (poly(sides[static_cast<size_t>(idx[0])], sides[static_cast<size_t>(idx[1])],
                 sides[static_cast<size_t>(idx[2])])
                .is_zero())
            return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

}  // namespace equimetric
