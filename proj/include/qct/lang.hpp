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

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qct/errors.hpp"

namespace qct {

inline constexpr std::string_view kFalsityToken = "f";

inline bool is_reserved_word(std::string_view word) {
    return word == "f" || word == "not" || word == "snot" || word == "and" || word == "or";
}

/// Immutable sentence AST over the core connectives: atoms, the falsity
/// constant f, negation, square root of negation and the ternary
/// conjunction Conj3(a, b, f). Binary `and`/`or` exist only as surface
/// syntax and are desugared by the parser. Copies share structure.
class Sentence {
   public:
    enum class Kind { Atom, Falsity, Neg, SqrtNeg, Conj3 };

    static Sentence atom(std::string name) {
        if (name.empty()) {
            throw std::invalid_argument("atom name must be nonempty");
        }
        if (is_reserved_word(name)) {
            throw ReservedName(name);
        }
        return Sentence(Kind::Atom, std::move(name), {});
    }
    static Sentence falsity() {
        return Sentence(Kind::Falsity, std::string(kFalsityToken), {});
    }
    static Sentence neg(Sentence s) {
        return Sentence(Kind::Neg, {}, {std::move(s)});
    }
    static Sentence sqrt_neg(Sentence s) {
        return Sentence(Kind::SqrtNeg, {}, {std::move(s)});
    }
    /// a AND b, i.e. Conj3(a, b, f).
    static Sentence conj(Sentence a, Sentence b) {
        return Sentence(Kind::Conj3, {}, {std::move(a), std::move(b), falsity()});
    }
    static Sentence conj3(Sentence a, Sentence b, Sentence c) {
        if (c.kind() != Kind::Falsity) {
            throw std::invalid_argument("third argument of a ternary conjunction must be f");
        }
        return Sentence(Kind::Conj3, {}, {std::move(a), std::move(b), std::move(c)});
    }
    /// a OR b, i.e. Neg(Conj3(Neg a, Neg b, f)).
    static Sentence disj(Sentence a, Sentence b) {
        return neg(conj(neg(std::move(a)), neg(std::move(b))));
    }

    Kind kind() const {
        return node_->kind;
    }
    bool is_atomic() const {
        return kind() == Kind::Atom || kind() == Kind::Falsity;
    }
    /// Atom name, or "f" for the falsity constant.
    const std::string &name() const {
        return node_->name;
    }
    std::span<const Sentence> children() const {
        return node_->children;
    }
    const Sentence &child(std::size_t i) const {
        return node_->children.at(i);
    }

    friend bool operator==(const Sentence &a, const Sentence &b) {
        if (a.node_ == b.node_) {
            return true;
        }
        if (a.kind() != b.kind() || a.name() != b.name()) {
            return false;
        }
        auto ca = a.children();
        auto cb = b.children();
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (!(ca[i] == cb[i])) {
                return false;
            }
        }
        return true;
    }

   private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Sentence> children;
    };

    Sentence(Kind kind, std::string name, std::vector<Sentence> children)
        : node_(std::make_shared<const Node>(Node{kind, std::move(name), std::move(children)})) {
    }

    std::shared_ptr<const Node> node_;
};

/// Number of atomic occurrences, f included.
inline std::size_t atomic_complexity(const Sentence &s) {
    if (s.is_atomic()) {
        return 1;
    }
    std::size_t total = 0;
    for (const auto &c : s.children()) {
        total += atomic_complexity(c);
    }
    return total;
}

/// Atomic occurrences in left-to-right leaf order.
inline std::vector<Sentence> atoms_of(const Sentence &s) {
    std::vector<Sentence> out;
    auto walk = [&out](const auto &self, const Sentence &node) -> void {
        if (node.is_atomic()) {
            out.push_back(node);
            return;
        }
        for (const auto &c : node.children()) {
            self(self, c);
        }
    };
    walk(walk, s);
    return out;
}

inline std::size_t ast_depth(const Sentence &s) {
    std::size_t deepest = 0;
    for (const auto &c : s.children()) {
        deepest = std::max(deepest, ast_depth(c));
    }
    return deepest + 1;
}

namespace detail {

enum class TokenKind { Ident, Not, SqrtNot, And, Or, Falsity, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' || c == ')') {
            out.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen, std::string(1, c), i});
            ++i;
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = i;
            while (i < text.size() &&
                   ((text[i] >= 'a' && text[i] <= 'z') || (text[i] >= '0' && text[i] <= '9') || text[i] == '_')) {
                ++i;
            }
            std::string word(text.substr(start, i - start));
            TokenKind kind = TokenKind::Ident;
            if (word == "not") {
                kind = TokenKind::Not;
            } else if (word == "snot") {
                kind = TokenKind::SqrtNot;
            } else if (word == "and") {
                kind = TokenKind::And;
            } else if (word == "or") {
                kind = TokenKind::Or;
            } else if (word == kFalsityToken) {
                kind = TokenKind::Falsity;
            }
            out.push_back({kind, std::move(word), start});
            continue;
        }
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::End, "", text.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    }

    Sentence parse_all() {
        Sentence s = parse_or();
        if (peek().kind != TokenKind::End) {
            throw SyntaxError(peek().offset, "unexpected '" + peek().text + "'");
        }
        return s;
    }

   private:
    const Token &peek() const {
        return tokens_[pos_];
    }
    const Token &advance() {
        return tokens_[pos_++];
    }

    Sentence parse_or() {
        Sentence lhs = parse_and();
        while (peek().kind == TokenKind::Or) {
            advance();
            lhs = Sentence::disj(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Sentence parse_and() {
        Sentence lhs = parse_unary();
        while (peek().kind == TokenKind::And) {
            advance();
            lhs = Sentence::conj(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Sentence parse_unary() {
        const Token &tok = advance();
        switch (tok.kind) {
            case TokenKind::Not:
                return Sentence::neg(parse_unary());
            case TokenKind::SqrtNot:
                return Sentence::sqrt_neg(parse_unary());
            case TokenKind::Ident:
                return Sentence::atom(tok.text);
            case TokenKind::Falsity:
                return Sentence::falsity();
            case TokenKind::LParen: {
                Sentence inner = parse_or();
                if (peek().kind != TokenKind::RParen) {
                    throw SyntaxError(peek().offset, "expected ')'");
                }
                advance();
                return inner;
            }
            case TokenKind::End:
                throw SyntaxError(tok.offset, "unexpected end of input");
            default:
                throw SyntaxError(tok.offset, "unexpected '" + tok.text + "'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Printer precedence levels: or < and < unary/atomic.
inline constexpr int kPrecOr = 0;
inline constexpr int kPrecAnd = 1;
inline constexpr int kPrecUnary = 2;

/// Matches Neg(Conj3(Neg a, Neg b, f)), the desugared form of `a or b`.
inline bool is_disjunction(const Sentence &s) {
    if (s.kind() != Sentence::Kind::Neg) {
        return false;
    }
    const Sentence &inner = s.child(0);
    return inner.kind() == Sentence::Kind::Conj3 && inner.child(0).kind() == Sentence::Kind::Neg &&
           inner.child(1).kind() == Sentence::Kind::Neg;
}

inline int precedence(const Sentence &s) {
    if (is_disjunction(s)) {
        return kPrecOr;
    }
    if (s.kind() == Sentence::Kind::Conj3) {
        return kPrecAnd;
    }
    return kPrecUnary;
}

inline void print(const Sentence &s, int min_prec, std::string &out) {
    bool parens = precedence(s) < min_prec;
    if (parens) {
        out += '(';
    }
    if (is_disjunction(s)) {
        const Sentence &inner = s.child(0);
        print(inner.child(0).child(0), kPrecOr, out);
        out += " or ";
        print(inner.child(1).child(0), kPrecAnd, out);
    } else {
        switch (s.kind()) {
            case Sentence::Kind::Atom:
            case Sentence::Kind::Falsity:
                out += s.name();
                break;
            case Sentence::Kind::Neg:
                out += "not ";
                print(s.child(0), kPrecUnary, out);
                break;
            case Sentence::Kind::SqrtNeg:
                out += "snot ";
                print(s.child(0), kPrecUnary, out);
                break;
            case Sentence::Kind::Conj3:
                print(s.child(0), kPrecAnd, out);
                out += " and ";
                print(s.child(1), kPrecUnary, out);
                break;
        }
    }
    if (parens) {
        out += ')';
    }
}

}  // namespace detail

/// Parses the surface syntax and returns the desugared AST.
///
///   sentence := or_expr
///   or_expr  := and_expr { "or" and_expr }
///   and_expr := unary { "and" unary }
///   unary    := "not" unary | "snot" unary | atom | "f" | "(" sentence ")"
inline Sentence parse(std::string_view text) {
    return detail::Parser(text).parse_all();
}

/// Surface syntax with minimal parentheses; `parse(to_string(s)) == s`.
inline std::string to_string(const Sentence &s) {
    std::string out;
    detail::print(s, detail::kPrecOr, out);
    return out;
}

/// Constructor-style rendering of the core AST, e.g. `Conj3(p, Neg(p), f)`.
inline std::string to_debug_string(const Sentence &s) {
    switch (s.kind()) {
        case Sentence::Kind::Atom:
        case Sentence::Kind::Falsity:
            return s.name();
        case Sentence::Kind::Neg:
            return "Neg(" + to_debug_string(s.child(0)) + ")";
        case Sentence::Kind::SqrtNeg:
            return "SqrtNeg(" + to_debug_string(s.child(0)) + ")";
        case Sentence::Kind::Conj3:
            return "Conj3(" + to_debug_string(s.child(0)) + ", " + to_debug_string(s.child(1)) + ", " +
                   to_debug_string(s.child(2)) + ")";
    }
    return "?";
}

}  // namespace qct
