#pragma once

#include <random>
#include <vector>

#include "para/element.hpp"
#include "para/relations.hpp"
#include "para/tensor.hpp"

namespace para {

namespace detail {

/// Positions of reducible adjacent pairs in w.
inline void reducible_positions(const Word& w, const RelationSystem& rs,
                                std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (rs.reduce_pair(w[i], w[i + 1])) out.push_back(i);
}

/// Applies the rule at position i, pushing the replacement terms.
template <typename Push>
inline void apply_rule_at(const Word& w, const Scalar& c, std::size_t i,
                          const RelationSystem& rs, Push&& push) {
    PairRewrite rule = *rs.reduce_pair(w[i], w[i + 1]);
    if (rule.has_swap) {
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        push(std::move(swapped), c * rule.swap_sign);
    }
    if (rule.has_scalar && rule.scalar_coeff != 0) {
        Word shrunk;
        shrunk.reserve(w.size() - 2);
        shrunk.insert(shrunk.end(), w.begin(), w.begin() + i);
        shrunk.insert(shrunk.end(), w.begin() + i + 2, w.end());
        push(std::move(shrunk), c * rule.scalar_coeff);
    }
}

}  // namespace detail

/// Normal form of a single word, reducing the leftmost reducible pair
/// each step.
inline Element normal_form_word(Word w, const RelationSystem& rs,
                                Scalar coeff = Scalar(1)) {
    rs.validate_word(w);
    Element result;
    std::vector<std::pair<Word, Scalar>> stack;
    stack.emplace_back(std::move(w), std::move(coeff));
    while (!stack.empty()) {
        auto [word, c] = std::move(stack.back());
        stack.pop_back();
        std::size_t i = 0;
        bool reduced = false;
        for (; i + 1 < word.size(); ++i) {
            if (rs.reduce_pair(word[i], word[i + 1])) {
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.add_term(std::move(word), std::move(c));
            continue;
        }
        detail::apply_rule_at(word, c, i, rs, [&](Word nw, Scalar nc) {
            stack.emplace_back(std::move(nw), std::move(nc));
        });
    }
    return result;
}

/// The unique canonical representative of x modulo the backend relations.
inline Element normal_form(const Element& x, const RelationSystem& rs) {
    Element result;
    for (const auto& [w, c] : x.terms()) result += normal_form_word(w, rs, c);
    return result;
}

/// Same result as normal_form, but resolves each step at a randomly chosen
/// reducible position. Used to evidence confluence.
inline Element normal_form_random_strategy(const Element& x, const RelationSystem& rs,
                                           std::mt19937_64& rng) {
    Element result;
    std::vector<std::pair<Word, Scalar>> stack;
    std::vector<std::size_t> positions;
    for (const auto& [w0, c0] : x.terms()) {
        rs.validate_word(w0);
        stack.emplace_back(w0, c0);
        while (!stack.empty()) {
            auto [word, c] = std::move(stack.back());
            stack.pop_back();
            detail::reducible_positions(word, rs, positions);
            if (positions.empty()) {
                result.add_term(std::move(word), std::move(c));
                continue;
            }
            std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
            std::size_t i = positions[pick(rng)];
            detail::apply_rule_at(word, c, i, rs, [&](Word nw, Scalar nc) {
                stack.emplace_back(std::move(nw), std::move(nc));
            });
        }
    }
    return result;
}

inline bool is_zero(const Element& x, const RelationSystem& rs) {
    return normal_form(x, rs).empty();
}

/// Factor-wise normal form of a tensor element, re-expanded bilinearly.
/// Sound in Graded mode because every rule preserves word degree mod 2.
inline TensorElement tensor_normal_form(const TensorElement& x,
                                        const RelationSystem& rs_left,
                                        const RelationSystem& rs_right) {
    TensorElement result(x.mode());
    for (const auto& [key, c] : x.terms()) {
        Element left = normal_form_word(key.first, rs_left);
        Element right = normal_form_word(key.second, rs_right);
        for (const auto& [u, cu] : left.terms())
            for (const auto& [v, cv] : right.terms())
                result.add_term(u, v, c * cu * cv);
    }
    return result;
}

inline bool is_zero(const TensorElement& x, const RelationSystem& rs_left,
                    const RelationSystem& rs_right) {
    return tensor_normal_form(x, rs_left, rs_right).empty();
}

}  // namespace para
