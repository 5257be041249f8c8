#ifndef RINGLAB_TESTS_FUZZ_HPP
#define RINGLAB_TESTS_FUZZ_HPP

#include <random>
#include <string>
#include <vector>

#include "ringlab/dsl.hpp"

namespace ringlab::fuzz {

/// Random valid AST, bounded depth. Deterministic via the caller's engine.
inline RingExpr random_expr(std::mt19937& rng, int depth) {
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    const bool leaf = depth <= 0 || pick(0, 2) == 0;
    RingExpr e;
    if (leaf) {
        if (pick(0, 1) == 0) {
            e.kind = ExprKind::ZMod;
            e.ints = {pick(2, 12)};
        } else {
            e.kind = ExprKind::GF;
            const int p = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(pick(0, 2))];
            e.ints = {p, pick(1, 2)};
        }
        return e;
    }
    switch (pick(0, 11)) {
        case 0: {
            e.kind = ExprKind::Prod;
            const int k = pick(1, 3);
            for (int i = 0; i < k; ++i) e.children.push_back(random_expr(rng, depth - 1));
            break;
        }
        case 1:
            e.kind = ExprKind::M;
            e.ints = {pick(1, 3)};
            e.children.push_back(random_expr(rng, depth - 1));
            break;
        case 2:
            e.kind = ExprKind::T;
            e.ints = {pick(1, 3)};
            e.children.push_back(random_expr(rng, depth - 1));
            break;
        case 3:
            e.kind = ExprKind::Tskew;
            e.ints = {pick(1, 3)};
            e.children.push_back(random_expr(rng, depth - 1));
            e.alpha = pick(0, 1) ? "frobenius" : "id";
            break;
        case 4:
            e.kind = ExprKind::PolyMod;
            e.children.push_back(random_expr(rng, depth - 1));
            e.ints = {pick(2, 4)};
            break;
        case 5:
            e.kind = ExprKind::SkewPolyMod;
            e.children.push_back(random_expr(rng, depth - 1));
            e.ints = {pick(2, 4)};
            e.alpha = pick(0, 1) ? "frobenius" : "id";
            break;
        case 6:
            e.kind = ExprKind::TrivExt;
            e.children.push_back(random_expr(rng, depth - 1));
            break;
        case 7:
            e.kind = ExprKind::DT;
            e.children.push_back(random_expr(rng, depth - 1));
            break;
        case 8:
            e.kind = ExprKind::Ks;
            e.children.push_back(random_expr(rng, depth - 1));
            e.scalar = pick(0, 5);
            break;
        case 9:
            e.kind = ExprKind::FM;
            e.ints = {pick(2, 3)};
            e.children.push_back(random_expr(rng, depth - 1));
            e.scalar = pick(0, 5);
            break;
        case 10:
            e.kind = ExprKind::MoritaTriv;
            e.children.push_back(random_expr(rng, depth - 1));
            break;
        default: {
            e.kind = ExprKind::GroupRing;
            e.children.push_back(random_expr(rng, depth - 1));
            static const std::vector<std::string> groups = {"C1", "C2", "C3",
                                                            "C4", "C2xC2", "S3"};
            e.group_name = groups[static_cast<std::size_t>(pick(0, 5))];
            break;
        }
    }
    return e;
}

}  // namespace ringlab::fuzz

#endif
