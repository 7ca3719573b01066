// Copyright 2026 The qct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qct/lang.hpp"

namespace qct {

/// Leveled decomposition of a sentence. Level 1 holds the sentence itself,
/// each following level expands every node of the previous one, and the
/// last level holds exactly the atomic occurrences.
///
/// The branching rule: an atomic node is carried down unchanged, Neg b and
/// SqrtNeg b branch to b, and Conj3(b, c, f) branches to b, c, f in order.
class SyntacticTree {
   public:
    explicit SyntacticTree(std::vector<std::vector<Sentence>> levels) : levels_(std::move(levels)) {
    }

    std::size_t height() const {
        return levels_.size();
    }
    /// 1-based, root first.
    const std::vector<Sentence> &level(std::size_t i) const {
        return levels_.at(i - 1);
    }
    const std::vector<std::vector<Sentence>> &levels() const {
        return levels_;
    }
    const Sentence &root() const {
        return levels_.front().front();
    }

   private:
    std::vector<std::vector<Sentence>> levels_;
};

inline bool all_atomic(const std::vector<Sentence> &level) {
    for (const auto &s : level) {
        if (!s.is_atomic()) {
            return false;
        }
    }
    return true;
}

inline SyntacticTree build_tree(const Sentence &s) {
    std::vector<std::vector<Sentence>> levels{{s}};
    while (!all_atomic(levels.back())) {
        std::vector<Sentence> next;
        for (const auto &node : levels.back()) {
            if (node.is_atomic()) {
                next.push_back(node);
            } else {
                for (const auto &c : node.children()) {
                    next.push_back(c);
                }
            }
        }
        levels.push_back(std::move(next));
    }
    return SyntacticTree(std::move(levels));
}

inline std::size_t height(const SyntacticTree &t) {
    return t.height();
}

/// "(p, not p, f)"
inline std::string level_to_string(const std::vector<Sentence> &level) {
    std::string out = "(";
    for (std::size_t j = 0; j < level.size(); ++j) {
        if (j) {
            out += ", ";
        }
        out += to_string(level[j]);
    }
    return out + ")";
}

/// One level per line, root first.
inline std::string to_string(const SyntacticTree &t) {
    std::string out;
    for (const auto &level : t.levels()) {
        out += level_to_string(level);
        out += '\n';
    }
    return out;
}

}  // namespace qct
