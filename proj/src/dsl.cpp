#include "riskman/dsl.hpp"
#include "text_cursor.hpp"

#include <cctype>

namespace riskman {

namespace {

constexpr int kMaxNesting = 256;

// Tokens: '(', ')', and atoms (bare names, pfx:names, <iri>, numbers).
struct SexprLexer {
    detail::Cursor cur;
    int depth = 0;
    explicit SexprLexer(std::string_view text) : cur(text) {}

    void enter() {
        if (++depth > kMaxNesting) cur.fail("expression nesting exceeds the supported depth");
    }
    void leave() { --depth; }

    void skip() {
        while (!cur.eof()) {
            char c = cur.peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                cur.advance();
            } else if (c == ';') {
                while (!cur.eof() && cur.peek() != '\n') cur.advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip();
        return cur.eof();
    }

    bool consume_open() {
        skip();
        return cur.consume('(');
    }

    bool peek_close() {
        skip();
        return cur.peek() == ')';
    }

    void expect_close() {
        skip();
        if (!cur.consume(')')) cur.fail("expected ')'");
    }

    std::string atom() {
        skip();
        if (cur.eof()) cur.fail("unexpected end of input");
        if (cur.peek() == '<') {
            cur.advance();
            return "<" + detail::read_iri_body(cur) + ">";
        }
        std::string out;
        while (!cur.eof()) {
            char c = cur.peek();
            if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c)))
                break;
            out += cur.advance();
        }
        if (out.empty()) cur.fail("expected an atom");
        return out;
    }

    [[noreturn]] void fail(const std::string& message) { cur.fail(message); }
};

enum class NamePosition { Concept, Role, Individual };

std::string resolve_name(SexprLexer& lex, const std::string& atom, DslContext& ctx,
                         NamePosition position, bool declare = false) {
    std::string iri_text;
    if (atom.size() > 1 && atom.front() == '<' && atom.back() == '>') {
        iri_text = atom.substr(1, atom.size() - 2);
    } else if (auto colon = atom.find(':'); colon != std::string::npos) {
        std::string prefix = atom.substr(0, colon);
        auto ns = ctx.prefixes.expand(prefix);
        if (!ns)
            throw UnknownNameError("unknown-prefix: '" + prefix + ":' is not declared");
        iri_text = *ns + atom.substr(colon + 1);
    } else {
        iri_text = ctx.default_ns + atom;
    }
    try {
        (void)iri(iri_text);
    } catch (const ValueError& e) {
        lex.fail(e.what());
    }

    switch (position) {
    case NamePosition::Concept:
        if (declare && !ctx.known_concept(iri_text)) ctx.extra_concepts.insert(iri_text);
        if (ctx.require_known_names && !ctx.known_concept(iri_text))
            throw UnknownNameError("unknown-name: '" + iri_text +
                                   "' is not a declared class (declare it via an extension axiom)");
        break;
    case NamePosition::Role:
        if (declare && !ctx.known_role(iri_text)) ctx.extra_roles.insert(iri_text);
        if (ctx.require_known_names && !ctx.known_role(iri_text))
            throw UnknownNameError("unknown-name: '" + iri_text + "' is not a declared role");
        break;
    case NamePosition::Individual:
        break; // individuals are open-ended
    }
    return iri_text;
}

ConceptExpr parse_concept(SexprLexer& lex, DslContext& ctx, bool declare_names) {
    lex.enter();
    struct Leave { SexprLexer& l; ~Leave() { l.leave(); } } leave{lex};
    lex.skip();
    if (lex.cur.peek() != '(') {
        std::string word = lex.atom();
        if (word == "top") return ConceptExpr::top();
        if (word == "bottom") return ConceptExpr::bottom();
        lex.fail("expected concept expression, got '" + word + "'");
    }
    lex.consume_open();
    std::string head = lex.atom();
    if (head == "class") {
        std::string name = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept, declare_names);
        lex.expect_close();
        return ConceptExpr::cls(name);
    }
    if (head == "ind") {
        std::string name = resolve_name(lex, lex.atom(), ctx, NamePosition::Individual);
        lex.expect_close();
        return ConceptExpr::nominal(iri(name));
    }
    if (head == "and") {
        std::vector<ConceptExpr> parts;
        while (!lex.peek_close()) parts.push_back(parse_concept(lex, ctx, declare_names));
        lex.expect_close();
        if (parts.empty()) lex.fail("'and' requires at least one conjunct");
        return ConceptExpr::conj(std::move(parts));
    }
    if (head == "some") {
        std::string role = resolve_name(lex, lex.atom(), ctx, NamePosition::Role, declare_names);
        ConceptExpr filler = parse_concept(lex, ctx, declare_names);
        lex.expect_close();
        return ConceptExpr::exists(role, std::move(filler));
    }
    lex.fail("unknown concept constructor '" + head + "'");
}

} // namespace

std::vector<Axiom> parse_axiom_dsl(std::string_view text, DslContext& ctx) {
    SexprLexer lex(text);
    std::vector<Axiom> axioms;

    while (!lex.at_end()) {
        if (!lex.consume_open()) lex.fail("expected '(' starting an axiom");
        std::string head = lex.atom();

        if (head == "gci") {
            ConceptExpr lhs = parse_concept(lex, ctx, true);
            ConceptExpr rhs = parse_concept(lex, ctx, true);
            lex.expect_close();
            axioms.push_back(Axiom::gci(std::move(lhs), std::move(rhs)));
        } else if (head == "role-incl") {
            if (!lex.consume_open()) lex.fail("expected '(chain ...)'");
            if (lex.atom() != "chain") lex.fail("expected 'chain'");
            std::vector<std::string> chain;
            while (!lex.peek_close())
                chain.push_back(resolve_name(lex, lex.atom(), ctx, NamePosition::Role, true));
            lex.expect_close();
            if (chain.empty()) lex.fail("role inclusion chain must be non-empty");
            std::string super = resolve_name(lex, lex.atom(), ctx, NamePosition::Role, true);
            lex.expect_close();
            axioms.push_back(Axiom::role_inclusion(std::move(chain), std::move(super)));
        } else if (head == "range") {
            std::string role = resolve_name(lex, lex.atom(), ctx, NamePosition::Role, true);
            std::string name = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept, true);
            lex.expect_close();
            axioms.push_back(Axiom::range(std::move(role), std::move(name)));
        } else if (head == "transitive") {
            std::string role = resolve_name(lex, lex.atom(), ctx, NamePosition::Role, true);
            lex.expect_close();
            axioms.push_back(Axiom::transitive(std::move(role)));
        } else if (head == "disjoint") {
            std::string a = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept, true);
            std::string b = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept, true);
            lex.expect_close();
            axioms.push_back(Axiom::disjoint(std::move(a), std::move(b)));
        } else {
            lex.fail("unknown axiom form '" + head + "'");
        }

        if (auto reason = check_fragment(axioms.back()))
            throw ValueError("unsupported: " + *reason);
    }
    return axioms;
}

namespace {

PathExpr parse_path(SexprLexer& lex, DslContext& ctx) {
    lex.enter();
    struct Leave { SexprLexer& l; ~Leave() { l.leave(); } } leave{lex};
    lex.skip();
    if (lex.cur.peek() != '(') {
        std::string role = resolve_name(lex, lex.atom(), ctx, NamePosition::Role);
        return PathExpr::role_path(role);
    }
    lex.consume_open();
    std::string head = lex.atom();
    if (head == "path") {
        std::string role = resolve_name(lex, lex.atom(), ctx, NamePosition::Role);
        lex.expect_close();
        return PathExpr::role_path(role);
    }
    if (head == "inv") {
        PathExpr inner = parse_path(lex, ctx);
        lex.expect_close();
        return PathExpr::inverse(std::move(inner));
    }
    if (head == "star") {
        PathExpr inner = parse_path(lex, ctx);
        lex.expect_close();
        return PathExpr::star(std::move(inner));
    }
    if (head == "seq" || head == "alt") {
        std::vector<PathExpr> parts;
        while (!lex.peek_close()) parts.push_back(parse_path(lex, ctx));
        lex.expect_close();
        if (parts.empty()) lex.fail("'" + head + "' requires at least one part");
        return head == "seq" ? PathExpr::seq(std::move(parts)) : PathExpr::alt(std::move(parts));
    }
    lex.fail("unknown path constructor '" + head + "'");
}

ShapeExpr parse_shape(SexprLexer& lex, DslContext& ctx) {
    lex.enter();
    struct Leave { SexprLexer& l; ~Leave() { l.leave(); } } leave{lex};
    lex.skip();
    if (lex.cur.peek() != '(') {
        std::string word = lex.atom();
        if (word == "top") return ShapeExpr::top();
        lex.fail("expected shape expression, got '" + word + "'");
    }
    lex.consume_open();
    std::string head = lex.atom();
    if (head == "class") {
        std::string name = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept);
        lex.expect_close();
        return ShapeExpr::cls(name);
    }
    if (head == "ind") {
        std::string name = resolve_name(lex, lex.atom(), ctx, NamePosition::Individual);
        lex.expect_close();
        return ShapeExpr::individual_shape(iri(name));
    }
    if (head == "and") {
        std::vector<ShapeExpr> parts;
        while (!lex.peek_close()) parts.push_back(parse_shape(lex, ctx));
        lex.expect_close();
        if (parts.empty()) lex.fail("'and' requires at least one part");
        return ShapeExpr::conj(std::move(parts));
    }
    if (head == "not") {
        ShapeExpr inner = parse_shape(lex, ctx);
        lex.expect_close();
        return ShapeExpr::negate(std::move(inner));
    }
    if (head == "geq") {
        std::string n_atom = lex.atom();
        int n = 0;
        try {
            n = std::stoi(n_atom);
        } catch (...) {
            lex.fail("expected a positive count, got '" + n_atom + "'");
        }
        if (n < 1) lex.fail("count must be >= 1");
        PathExpr path = parse_path(lex, ctx);
        ShapeExpr filler = parse_shape(lex, ctx);
        lex.expect_close();
        return ShapeExpr::at_least(n, std::move(path), std::move(filler));
    }
    if (head == "some") {
        PathExpr path = parse_path(lex, ctx);
        ShapeExpr filler = parse_shape(lex, ctx);
        lex.expect_close();
        return ShapeExpr::some(std::move(path), std::move(filler));
    }
    if (head == "all") {
        PathExpr path = parse_path(lex, ctx);
        ShapeExpr filler = parse_shape(lex, ctx);
        lex.expect_close();
        return ShapeExpr::for_all(std::move(path), std::move(filler));
    }
    if (head == "eq") {
        PathExpr left = parse_path(lex, ctx);
        PathExpr right = parse_path(lex, ctx);
        lex.expect_close();
        return ShapeExpr::path_equal(std::move(left), std::move(right));
    }
    lex.fail("unknown shape constructor '" + head + "'");
}

} // namespace

std::vector<Constraint> parse_shape_dsl(std::string_view text, DslContext& ctx) {
    SexprLexer lex(text);
    std::vector<Constraint> constraints;

    while (!lex.at_end()) {
        if (!lex.consume_open()) lex.fail("expected '(constraint ...)'");
        if (lex.atom() != "constraint") lex.fail("expected 'constraint'");
        std::string head_concept = resolve_name(lex, lex.atom(), ctx, NamePosition::Concept);
        ShapeExpr body = parse_shape(lex, ctx);
        lex.expect_close();
        Constraint c;
        c.id = "X" + std::to_string(++ctx.constraint_counter) + "." +
               local_name(std::string_view(head_concept));
        c.head_concept = head_concept;
        c.body = std::move(body);
        constraints.push_back(std::move(c));
    }
    return constraints;
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string render_name(const std::string& iri_text, const DslContext& ctx) {
    if (iri_text.size() > ctx.default_ns.size() &&
        iri_text.compare(0, ctx.default_ns.size(), ctx.default_ns) == 0) {
        std::string local = iri_text.substr(ctx.default_ns.size());
        bool bare = !local.empty();
        for (char c : local)
            if (!detail::is_name_char(c) || c == '.') bare = false;
        if (bare) return local;
    }
    std::string shortened = ctx.prefixes.shorten(iri_text);
    if (shortened != iri_text) return shortened;
    return "<" + iri_text + ">";
}

} // namespace

std::string render_concept(const ConceptExpr& expr, const PrefixMap& prefixes) {
    DslContext ctx;
    ctx.prefixes = prefixes;
    switch (expr.kind) {
    case ConceptExpr::Kind::Top: return "top";
    case ConceptExpr::Kind::Bottom: return "bottom";
    case ConceptExpr::Kind::Name: return "(class " + render_name(expr.name, ctx) + ")";
    case ConceptExpr::Kind::Nominal: return "(ind " + render_name(expr.individual.value, ctx) + ")";
    case ConceptExpr::Kind::And: {
        std::string out = "(and";
        for (const auto& c : expr.children) out += " " + render_concept(c, prefixes);
        return out + ")";
    }
    case ConceptExpr::Kind::Exists:
        return "(some " + render_name(expr.role, ctx) + " " +
               render_concept(expr.filler(), prefixes) + ")";
    }
    return {};
}

std::string render_axiom(const Axiom& axiom, const PrefixMap& prefixes) {
    DslContext ctx;
    ctx.prefixes = prefixes;
    switch (axiom.kind) {
    case Axiom::Kind::Gci:
        return "(gci " + render_concept(axiom.lhs, prefixes) + " " +
               render_concept(axiom.rhs, prefixes) + ")";
    case Axiom::Kind::RoleInclusion: {
        std::string out = "(role-incl (chain";
        for (const auto& r : axiom.chain) out += " " + render_name(r, ctx);
        return out + ") " + render_name(axiom.super_role, ctx) + ")";
    }
    case Axiom::Kind::Range:
        return "(range " + render_name(axiom.role, ctx) + " " +
               render_name(axiom.range_concept, ctx) + ")";
    case Axiom::Kind::Transitive:
        return "(transitive " + render_name(axiom.role, ctx) + ")";
    case Axiom::Kind::Disjoint:
        return "(disjoint " + render_name(axiom.disjoint_pair.first, ctx) + " " +
               render_name(axiom.disjoint_pair.second, ctx) + ")";
    }
    return {};
}

std::string render_axiom_dsl(const std::vector<Axiom>& axioms, const DslContext& ctx) {
    std::string out;
    for (const auto& a : axioms) {
        out += render_axiom(a, ctx.prefixes);
        out += '\n';
    }
    return out;
}

} // namespace riskman
