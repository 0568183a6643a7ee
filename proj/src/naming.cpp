#include "gentle/naming.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gentle/errors.hpp"

namespace gentle {

namespace {

std::vector<int> tokenize_word(const GradedQuiver& q, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        std::vector<int> arrows;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            int a = q.arrow_index(part);
            if (a == -1) throw domain_error("unknown arrow '" + part + "'");
            arrows.push_back(a);
        }
        return arrows;
    }
    // Greedy longest-match with backtracking over arrow names.
    std::vector<int> arrows;
    std::function<bool(size_t)> go = [&](size_t pos) {
        if (pos == text.size()) return true;
        std::vector<std::pair<size_t, int>> options;
        for (size_t i = 0; i < q.arrows.size(); ++i) {
            const std::string& name = q.arrows[i].name;
            if (text.compare(pos, name.size(), name) == 0)
                options.push_back({name.size(), static_cast<int>(i)});
        }
        std::sort(options.rbegin(), options.rend());
        for (auto [len, idx] : options) {
            arrows.push_back(idx);
            if (go(pos + len)) return true;
            arrows.pop_back();
        }
        return false;
    };
    if (!go(0)) throw domain_error("cannot read arrow word '" + text + "'");
    return arrows;
}

CyclicWord find_cycle(const GentleAlgebra& A, const PathWord& w) {
    if (!w.closed()) throw domain_error("cycle word is not closed");
    PathWord canonical = canonical_rotation(A, w);
    for (const CyclicWord& c : complete_cycles(A))
        if (c.primitive == canonical) return c;
    throw domain_error("word is not a primitive complete cycle of this algebra");
}

}  // namespace

PathWord parse_word(const GentleAlgebra& A, const std::string& text) {
    std::vector<int> arrows = tokenize_word(A.q, text);
    if (arrows.empty()) throw domain_error("empty arrow word");
    if (!composable_word(A, arrows)) throw domain_error("word '" + text + "' is not composable");
    return make_word(A, arrows);
}

std::string class_name(const GentleAlgebra& A, const HHClass& c) {
    switch (c.kind) {
        case HHClass::Kind::Unit: return "unit";
        case HHClass::Kind::N0:
        case HHClass::Kind::N1: {
            std::string s = c.kind == HHClass::Kind::N0 ? "N0[" : "N1[";
            return s + word_to_string(A, c.cycle.primitive) + "^" +
                   std::to_string(c.cycle.exponent) + "]";
        }
        case HHClass::Kind::StopChain:
            return "stop[chain:" + word_to_string(A, c.chain) + "]";
        case HHClass::Kind::StopLoop:
            return "stoploop[" + word_to_string(A, c.loop) + "]";
        case HHClass::Kind::Arrow: return "arrow[" + A.arrow(c.arrow).name + "]";
    }
    return "?";
}

HHClass parse_class(const GentleAlgebra& A, const Field& F, const std::string& text) {
    auto bracketed = [&](const std::string& prefix) -> std::optional<std::string> {
        if (text.rfind(prefix + "[", 0) != 0 || text.back() != ']') return std::nullopt;
        return text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
    };
    if (text == "unit") return unit_class();
    if (auto body = bracketed("N0"); body || (body = bracketed("N1"))) {
        int s = text[1] == '1' ? 1 : 0;
        size_t caret = body->rfind('^');
        int exponent = 1;
        std::string word_text = *body;
        if (caret != std::string::npos) {
            try {
                exponent = std::stoi(body->substr(caret + 1));
            } catch (const std::exception&) {
                throw domain_error("bad exponent in '" + text + "'");
            }
            word_text = body->substr(0, caret);
        }
        if (exponent < 1) throw domain_error("cycle exponent must be >= 1");
        CyclicWord cycle = find_cycle(A, parse_word(A, word_text));
        if (!trace_pair_exists(F, cycle, exponent))
            throw domain_error("class " + text + " vanishes over " + F.name() +
                               " (odd winding and characteristic != 2)");
        return trace_class(cycle, exponent, s);
    }
    if (auto body = bracketed("stop")) {
        if (body->rfind("chain:", 0) != 0)
            throw domain_error("stop classes are written stop[chain:<word>]");
        PathWord u = parse_word(A, body->substr(6));
        for (const MaximalChain& mc : maximal_chains_and_companions(A))
            if (mc.chain == u) {
                if (!mc.companion)
                    throw domain_error("maximal chain has no companion, so no class");
                return stop_chain_class(mc.chain, *mc.companion);
            }
        throw domain_error("word is not a maximal relation chain of this algebra");
    }
    if (auto body = bracketed("stoploop")) {
        PathWord u = parse_word(A, *body);
        for (const PathWord& w : closed_maximal_live(A))
            if (w == u) return stop_loop_class(w);
        throw domain_error("word is not a closed maximal live path of this algebra");
    }
    if (auto body = bracketed("arrow")) {
        int a = A.q.arrow_index(*body);
        if (a == -1) throw domain_error("unknown arrow '" + *body + "'");
        std::vector<int> tree = A.spanning_tree();
        if (std::find(tree.begin(), tree.end(), a) != tree.end())
            throw domain_error("arrow " + *body +
                               " lies on the spanning tree; its class is not a basis "
                               "element (use the non-tree arrows)");
        return arrow_class(a);
    }
    throw domain_error("cannot parse class name '" + text + "'");
}

std::string expression_string(const GentleAlgebra& A, const Field& F,
                              const HHExpression& e) {
    if (e.zero()) return "0";
    std::string out;
    for (const auto& [cls, coeff] : e.terms()) {
        if (!out.empty()) out += " + ";
        std::ostringstream c;
        c << F.normalize(coeff);
        out += c.str() + " * " + class_name(A, cls);
    }
    return out;
}

}  // namespace gentle
