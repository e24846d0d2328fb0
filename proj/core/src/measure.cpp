#include "caproute/measure.hpp"

#include <cctype>
#include <charconv>

#include "caproute/errors.hpp"

namespace caproute {

MeasurePtr make_leaf(MeasureKind kind, int k) {
    if (kind == MeasureKind::Min || kind == MeasureKind::Max)
        throw InvalidParameterError("make_leaf called with a combinator kind");
    if (kind == MeasureKind::KCliqueDensity && (k < 2 || k > kMaxCliqueSize))
        throw InvalidParameterError("clique size must be in [2, " +
                                    std::to_string(kMaxCliqueSize) + "]");
    auto m = std::make_shared<MeasureExpr>();
    m->kind = kind;
    m->k = kind == MeasureKind::KCliqueDensity ? k : 0;
    return m;
}

static MeasurePtr make_combinator(MeasureKind kind, std::vector<MeasurePtr> children) {
    if (children.size() < 2)
        throw InvalidParameterError("min/max need at least 2 arguments");
    for (const auto& c : children)
        if (!c) throw InvalidParameterError("null child expression");
    auto m = std::make_shared<MeasureExpr>();
    m->kind = kind;
    m->children = std::move(children);
    return m;
}

MeasurePtr make_min(std::vector<MeasurePtr> children) {
    return make_combinator(MeasureKind::Min, std::move(children));
}

MeasurePtr make_max(std::vector<MeasurePtr> children) {
    return make_combinator(MeasureKind::Max, std::move(children));
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("measure expression: " + msg + " at offset " + std::to_string(pos));
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string_view ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected a measure name");
        return text.substr(start, pos - start);
    }

    MeasurePtr expr() {
        std::string_view name = ident();
        if (name == "min" || name == "max") {
            if (!consume('(')) fail("expected '(' after '" + std::string(name) + "'");
            std::vector<MeasurePtr> children;
            children.push_back(expr());
            while (consume(',')) children.push_back(expr());
            if (!consume(')')) fail("expected ')' or ','");
            if (children.size() < 2)
                fail("'" + std::string(name) + "' needs at least 2 arguments");
            return name == "min" ? make_min(std::move(children))
                                 : make_max(std::move(children));
        }
        if (name == "edge") return make_leaf(MeasureKind::EdgeDensity);
        if (name == "mindeg") return make_leaf(MeasureKind::MinDegree);
        if (name == "sqdeg") return make_leaf(MeasureKind::SquaredDegree);
        if (name == "conn") return make_leaf(MeasureKind::EdgeConnectivity);
        if (name == "kclique") {
            if (!consume(':')) fail("'kclique' needs ':<k>'");
            skip_ws();
            int k = 0;
            auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), k);
            if (ec != std::errc() || p == text.data() + pos) fail("bad clique size");
            pos = static_cast<size_t>(p - text.data());
            if (k < 2 || k > kMaxCliqueSize)
                fail("clique size must be in [2, " + std::to_string(kMaxCliqueSize) + "]");
            return make_leaf(MeasureKind::KCliqueDensity, k);
        }
        fail("unknown measure '" + std::string(name) + "'");
    }
};

}  // namespace

MeasurePtr parse_measure(std::string_view text) {
    Parser p{text};
    MeasurePtr m = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return m;
}

std::string measure_to_string(const MeasureExpr& m) {
    switch (m.kind) {
        case MeasureKind::EdgeDensity: return "edge";
        case MeasureKind::MinDegree: return "mindeg";
        case MeasureKind::SquaredDegree: return "sqdeg";
        case MeasureKind::EdgeConnectivity: return "conn";
        case MeasureKind::KCliqueDensity: return "kclique:" + std::to_string(m.k);
        case MeasureKind::Min:
        case MeasureKind::Max: {
            std::string out = m.kind == MeasureKind::Min ? "min(" : "max(";
            for (size_t i = 0; i < m.children.size(); ++i) {
                if (i) out += ',';
                out += measure_to_string(*m.children[i]);
            }
            return out + ")";
        }
    }
    return "";
}

static void collect_leaves(const MeasureExpr& m, std::vector<const MeasureExpr*>& out) {
    if (m.is_leaf()) {
        for (const MeasureExpr* seen : out)
            if (seen->kind == m.kind && seen->k == m.k) return;
        out.push_back(&m);
        return;
    }
    for (const auto& c : m.children) collect_leaves(*c, out);
}

std::vector<const MeasureExpr*> measure_leaves(const MeasureExpr& m) {
    std::vector<const MeasureExpr*> out;
    collect_leaves(m, out);
    return out;
}

}  // namespace caproute
