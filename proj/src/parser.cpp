#include "oometrix/parser.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace oometrix {
namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int column = 1;

    bool is(const char* t) const { return text == t; }
    bool is_ident() const { return kind == Kind::Ident; }
};

struct LexResult {
    std::vector<Token> tokens;
    std::set<int> comment_lines;
    int line_count = 1;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool is_ident_char(char c) { return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

LexResult lex(const std::string& text) {
    LexResult out;
    int line = 1, col = 1;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < n) {
        char c = text[i];
        if (c == '\n' || c == '\r' || c == ' ' || c == '\t') {
            advance(c);
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            out.comment_lines.insert(line);
            while (i < n && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            out.comment_lines.insert(line);
            advance(text[i]);
            ++i;
            advance(text[i]);
            ++i;
            while (i < n && !(text[i] == '*' && i + 1 < n && text[i + 1] == '/')) {
                out.comment_lines.insert(line);
                advance(text[i]);
                ++i;
            }
            if (i < n) {
                out.comment_lines.insert(line);
                advance(text[i]);
                ++i;  // '*'
                advance(text[i]);
                ++i;  // '/'
            }
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (is_ident_start(c)) {
            t.kind = Token::Kind::Ident;
            while (i < n && is_ident_char(text[i])) {
                t.text += text[i];
                advance(text[i]);
                ++i;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Number;
            while (i < n && (is_ident_char(text[i]) || text[i] == '.')) {
                t.text += text[i];
                advance(text[i]);
                ++i;
            }
        } else if (c == '"' || c == '\'') {
            t.kind = Token::Kind::String;
            char quote = c;
            t.text += c;
            advance(c);
            ++i;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\' && i + 1 < n) {
                    t.text += text[i];
                    advance(text[i]);
                    ++i;
                }
                t.text += text[i];
                advance(text[i]);
                ++i;
            }
            if (i < n) {
                t.text += quote;
                advance(quote);
                ++i;
            }
        } else {
            t.kind = Token::Kind::Punct;
            // two-char operators we care about
            if ((c == '&' || c == '|') && i + 1 < n && text[i + 1] == c) {
                t.text = std::string(2, c);
                advance(c);
                ++i;
                advance(c);
                ++i;
            } else {
                t.text = std::string(1, c);
                advance(c);
                ++i;
            }
        }
        out.tokens.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = col;
    out.tokens.push_back(end);
    // A trailing newline terminates the last line, it does not start one.
    out.line_count = text.empty() ? 0
                                  : static_cast<int>(std::count(text.begin(), text.end(), '\n')) +
                                        (text.back() == '\n' ? 0 : 1);
    return out;
}

const std::set<std::string> kKeywords = {
    "package", "import",  "class",  "extends", "implements", "public",  "private", "protected",
    "static",  "final",   "abstract", "if",    "else",       "while",   "for",     "do",
    "switch",  "case",    "default", "break",  "continue",   "return",  "new",     "this",
    "super",   "try",     "catch",  "finally", "throw",      "throws",  "void",    "int",
    "long",    "short",   "byte",   "char",    "boolean",    "float",   "double",  "null",
    "true",    "false",   "instanceof"};

const std::set<std::string> kPrimitives = {"void", "int",   "long",  "short",  "byte",
                                           "char", "boolean", "float", "double"};

// ---------------------------------------------------------------------------
// Raw (pre-resolution) structures
// ---------------------------------------------------------------------------

struct Usage {
    enum class Kind {
        OwnCall,     // m(...) or this.m(...)
        VarCall,     // v.m(...) where v is a typed symbol; recv holds the raw type
        ClassCall,   // T.m(...) static-style; recv holds the raw type name
        CtorCall,    // new T(...); recv holds the raw type name
        VarField,    // v.f; recv holds the raw type
        ClassField,  // T.f; recv holds the raw type name
        OwnField,    // this.f or bare f matching an own field
    };
    Kind kind;
    std::string recv;  // raw type/class name, empty for Own*
    std::string name;
    std::size_t arity = 0;
    int line = 1;
};

struct RawMethod {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // (raw type, name)
    Visibility visibility = Visibility::Package;
    bool is_abstract = false;
    bool is_constructor = false;
    std::uint32_t decision_points = 0;
    std::uint32_t statements = 0;
    std::vector<Usage> usages;
};

struct RawClass {
    std::string simple_name;
    std::string package;
    std::vector<std::string> raw_parents;
    bool is_abstract = false;
    std::vector<AttributeInfo> attributes;  // type_name still raw
    std::vector<RawMethod> methods;
    int start_line = 1;
    int end_line = 1;
    std::size_t unit_index = 0;
    std::map<std::string, std::string> imports;  // simple -> qualified, from the unit
};

// ---------------------------------------------------------------------------
// Unit parser
// ---------------------------------------------------------------------------

class UnitParser {
public:
    UnitParser(const SourceUnit& unit, std::size_t unit_index, std::vector<ParseDiagnostic>& diags)
        : unit_(unit), unit_index_(unit_index), diags_(diags) {
        lex_ = lex(unit.text);
        toks_ = &lex_.tokens;
    }

    const LexResult& lexed() const { return lex_; }

    std::vector<RawClass> parse() {
        std::vector<RawClass> classes;
        if (cur().is("package")) {
            next();
            package_ = parse_qualified_name();
            expect(";");
        }
        while (cur().is("import")) {
            next();
            std::string qn = parse_qualified_name();
            bool star = false;
            if (cur().is("*")) {  // wildcard import: skipped lexically
                star = true;
                next();
            }
            expect(";");
            if (!star) {
                auto dot = qn.rfind('.');
                imports_[dot == std::string::npos ? qn : qn.substr(dot + 1)] = qn;
            }
        }
        while (cur().kind != Token::Kind::End) {
            bool abstract_mod = false;
            while (cur().is("public") || cur().is("final") || cur().is("abstract")) {
                if (cur().is("abstract")) abstract_mod = true;
                next();
            }
            if (cur().is("class")) {
                classes.push_back(parse_class(abstract_mod));
            } else {
                error("expected class declaration, got '" + cur().text + "'");
                next();
            }
        }
        return classes;
    }

private:
    const Token& cur() const { return (*toks_)[pos_]; }
    const Token& peek(std::size_t k = 1) const {
        return (*toks_)[std::min(pos_ + k, toks_->size() - 1)];
    }
    void next() {
        if (pos_ + 1 < toks_->size()) ++pos_;
    }
    void error(const std::string& msg) {
        diags_.push_back({unit_.path, cur().line, cur().column, msg, ParseDiagnostic::Severity::Error});
    }
    bool expect(const char* t) {
        if (cur().is(t)) {
            next();
            return true;
        }
        error(std::string("expected '") + t + "', got '" + cur().text + "'");
        return false;
    }

    std::string parse_qualified_name() {
        std::string qn = cur().text;
        next();
        while (cur().is(".") && peek().is_ident()) {
            next();
            qn += "." + cur().text;
            next();
        }
        return qn;
    }

    // Type = primitive | qualified name, optionally with [] suffixes.
    // Returns empty string when the current token cannot start a type.
    std::string try_parse_type() {
        if (!cur().is_ident()) return "";
        if (kKeywords.count(cur().text) && !kPrimitives.count(cur().text)) return "";
        std::string t = parse_qualified_name();
        while (cur().is("[") && peek().is("]")) {
            next();
            next();
            t += "[]";
        }
        return t;
    }

    void skip_balanced_braces() {
        int depth = 0;
        do {
            if (cur().is("{")) ++depth;
            if (cur().is("}")) --depth;
            next();
        } while (depth > 0 && cur().kind != Token::Kind::End);
    }

    void skip_to_semicolon() {
        int depth = 0;
        while (cur().kind != Token::Kind::End) {
            if (cur().is("{") || cur().is("(")) ++depth;
            if (cur().is("}") || cur().is(")")) --depth;
            if (cur().is(";") && depth <= 0) {
                next();
                return;
            }
            next();
        }
    }

    RawClass parse_class(bool abstract_mod) {
        RawClass rc;
        rc.package = package_;
        rc.imports = imports_;
        rc.unit_index = unit_index_;
        rc.is_abstract = abstract_mod;
        rc.start_line = cur().line;
        next();  // 'class'
        rc.simple_name = cur().text;
        next();
        if (cur().is("extends")) {
            next();
            rc.raw_parents.push_back(parse_qualified_name());
        }
        if (cur().is("implements")) {  // interface names are parents too
            next();
            rc.raw_parents.push_back(parse_qualified_name());
            while (cur().is(",")) {
                next();
                rc.raw_parents.push_back(parse_qualified_name());
            }
        }
        if (!expect("{")) return rc;

        struct PendingBody {
            std::size_t method_index;
            std::size_t begin;  // token index of '{'
            std::size_t end;    // token index one past matching '}'
        };
        std::vector<PendingBody> bodies;

        while (!cur().is("}") && cur().kind != Token::Kind::End) {
            Visibility vis = Visibility::Package;
            bool is_static = false, is_abstract = false;
            while (cur().is("public") || cur().is("private") || cur().is("protected") ||
                   cur().is("static") || cur().is("final") || cur().is("abstract")) {
                if (cur().is("public")) vis = Visibility::Public;
                else if (cur().is("private")) vis = Visibility::Private;
                else if (cur().is("protected")) vis = Visibility::Protected;
                else if (cur().is("static")) is_static = true;
                else if (cur().is("abstract")) is_abstract = true;
                next();
            }
            if (cur().is("class")) {
                error("nested classes are not supported in MiniOO");
                next();
                while (!cur().is("{") && cur().kind != Token::Kind::End) next();
                skip_balanced_braces();
                continue;
            }
            if (cur().is_ident() && cur().text == rc.simple_name && peek().is("(")) {
                // constructor
                RawMethod m;
                m.name = rc.simple_name;
                m.visibility = vis;
                m.is_constructor = true;
                next();
                parse_params(m);
                skip_throws();
                if (cur().is("{")) {
                    std::size_t begin = pos_;
                    skip_balanced_braces();
                    bodies.push_back({rc.methods.size(), begin, pos_});
                } else {
                    expect(";");
                }
                rc.methods.push_back(std::move(m));
                continue;
            }
            std::string type = try_parse_type();
            if (type.empty()) {
                error("unexpected token '" + cur().text + "' in class body");
                skip_to_semicolon();
                continue;
            }
            if (!cur().is_ident()) {
                error("expected member name after type '" + type + "'");
                skip_to_semicolon();
                continue;
            }
            std::string member = cur().text;
            next();
            if (cur().is("(")) {
                RawMethod m;
                m.name = member;
                m.visibility = vis;
                m.is_abstract = is_abstract;
                parse_params(m);
                skip_throws();
                if (cur().is("{")) {
                    std::size_t begin = pos_;
                    skip_balanced_braces();
                    bodies.push_back({rc.methods.size(), begin, pos_});
                } else {
                    m.is_abstract = true;
                    expect(";");
                }
                rc.methods.push_back(std::move(m));
            } else {
                // field (possibly a comma list), initializers skipped
                while (true) {
                    rc.attributes.push_back(AttributeInfo{member, type, vis, is_static});
                    if (cur().is("=")) {
                        int depth = 0;
                        while (cur().kind != Token::Kind::End) {
                            if (cur().is("(") || cur().is("{")) ++depth;
                            if (cur().is(")") || cur().is("}")) --depth;
                            if ((cur().is(",") || cur().is(";")) && depth <= 0) break;
                            next();
                        }
                    }
                    if (cur().is(",") && peek().is_ident()) {
                        next();
                        member = cur().text;
                        next();
                        continue;
                    }
                    break;
                }
                expect(";");
            }
        }
        rc.end_line = cur().line;
        expect("}");

        // Bodies are scanned after all member declarations are known so that
        // bare identifiers can be checked against the class's own fields.
        std::set<std::string> own_fields;
        for (const auto& a : rc.attributes) own_fields.insert(a.name);
        for (const auto& b : bodies) scan_body(rc.methods[b.method_index], b.begin, b.end, own_fields);
        return rc;
    }

    void parse_params(RawMethod& m) {
        expect("(");
        while (!cur().is(")") && cur().kind != Token::Kind::End) {
            std::string type = try_parse_type();
            if (type.empty()) {
                error("expected parameter type");
                break;
            }
            std::string pname;
            if (cur().is_ident()) {
                pname = cur().text;
                next();
            }
            m.params.emplace_back(type, pname);
            if (cur().is(",")) next();
        }
        expect(")");
    }

    void skip_throws() {
        if (cur().is("throws")) {
            next();
            parse_qualified_name();
            while (cur().is(",")) {
                next();
                parse_qualified_name();
            }
        }
    }

    // Counts the call's arguments by scanning its parenthesized argument
    // list; `open` indexes the '('.
    std::size_t call_arity(std::size_t open) const {
        int depth = 0;
        std::size_t commas = 0;
        bool any = false;
        for (std::size_t i = open; i < toks_->size(); ++i) {
            const Token& t = (*toks_)[i];
            if (t.is("(")) ++depth;
            else if (t.is(")")) {
                --depth;
                if (depth == 0) break;
            } else if (depth == 1) {
                any = true;
                if (t.is(",")) ++commas;
            }
        }
        return any ? commas + 1 : 0;
    }

    void scan_body(RawMethod& m, std::size_t begin, std::size_t end, const std::set<std::string>& own_fields) {
        std::map<std::string, std::string> symbols;  // name -> raw type (params + locals)
        for (const auto& [t, n] : m.params)
            if (!n.empty()) symbols[n] = t;

        int paren_depth = 0;
        bool stmt_start = true;
        for (std::size_t i = begin + 1; i + 1 < end; ++i) {
            const Token& t = (*toks_)[i];
            const Token& nx = (*toks_)[i + 1];
            const Token& pv = (*toks_)[i - 1];

            if (t.is("(")) ++paren_depth;
            else if (t.is(")")) --paren_depth;

            if (t.is("if") || t.is("while") || t.is("for") || t.is("case") || t.is("catch"))
                ++m.decision_points;
            else if (t.is("&&") || t.is("||") || t.is("?"))
                ++m.decision_points;

            if (t.is(";") && paren_depth == 0) ++m.statements;
            if (t.is("if") || t.is("while") || t.is("for") || t.is("switch") || t.is("do") || t.is("try"))
                ++m.statements;

            // Local variable declaration at statement start: Type name (= | ; | ,)
            if (stmt_start && t.is_ident() &&
                (kPrimitives.count(t.text) || (!kKeywords.count(t.text) && nx.is_ident()))) {
                std::size_t j = i;
                std::string type = (*toks_)[j].text;
                ++j;
                while ((*toks_)[j].is(".") && (*toks_)[j + 1].is_ident()) {
                    type += "." + (*toks_)[j + 1].text;
                    j += 2;
                }
                while ((*toks_)[j].is("[") && (*toks_)[j + 1].is("]")) {
                    type += "[]";
                    j += 2;
                }
                if ((*toks_)[j].is_ident() && !kKeywords.count((*toks_)[j].text)) {
                    const Token& after = (*toks_)[j + 1];
                    if (after.is("=") || after.is(";") || after.is(",") || after.is(":")) {
                        symbols[(*toks_)[j].text] = type;
                        // comma lists: scan shallowly for ", name"
                        std::size_t k = j + 1;
                        int d = 0;
                        while (k + 1 < end && !(*toks_)[k].is(";")) {
                            if ((*toks_)[k].is("(")) ++d;
                            if ((*toks_)[k].is(")")) --d;
                            if (d == 0 && (*toks_)[k].is(",") && (*toks_)[k + 1].is_ident() &&
                                ((*toks_)[k + 2].is("=") || (*toks_)[k + 2].is(",") || (*toks_)[k + 2].is(";")))
                                symbols[(*toks_)[k + 1].text] = type;
                            ++k;
                        }
                    }
                }
            }

            // new T(...)
            if (t.is("new") && nx.is_ident()) {
                std::size_t j = i + 1;
                std::string type = (*toks_)[j].text;
                ++j;
                while ((*toks_)[j].is(".") && (*toks_)[j + 1].is_ident()) {
                    type += "." + (*toks_)[j + 1].text;
                    j += 2;
                }
                if ((*toks_)[j].is("("))
                    m.usages.push_back({Usage::Kind::CtorCall, type, signature_name(type), call_arity(j), t.line});
            }

            if (t.is_ident() && !kKeywords.count(t.text)) {
                bool after_dot = pv.is(".");
                bool is_call = nx.is("(");
                if (is_call) {
                    std::size_t arity = call_arity(i + 1);
                    if (!after_dot) {
                        m.usages.push_back({Usage::Kind::OwnCall, "", t.text, arity, t.line});
                    } else {
                        const Token& recv = (*toks_)[i - 2];
                        if (recv.is("this")) {
                            m.usages.push_back({Usage::Kind::OwnCall, "", t.text, arity, t.line});
                        } else if (recv.is_ident() && !kKeywords.count(recv.text)) {
                            bool qualified_further = i >= 3 && (*toks_)[i - 3].is(".");
                            auto sym = symbols.find(recv.text);
                            if (sym != symbols.end() && !qualified_further) {
                                m.usages.push_back({Usage::Kind::VarCall, sym->second, t.text, arity, t.line});
                            } else if (own_fields.count(recv.text) && !qualified_further) {
                                m.usages.push_back({Usage::Kind::VarCall, "$field:" + recv.text, t.text, arity, t.line});
                            } else {
                                // treat the full dotted prefix as a class name
                                std::size_t j = i - 2;
                                std::string cls = recv.text;
                                while (j >= 2 && (*toks_)[j - 1].is(".") && (*toks_)[j - 2].is_ident()) {
                                    cls = (*toks_)[j - 2].text + "." + cls;
                                    j -= 2;
                                }
                                m.usages.push_back({Usage::Kind::ClassCall, cls, t.text, arity, t.line});
                            }
                        }
                        // receivers like ')' (chained calls) are dropped: no static type
                    }
                } else if (after_dot) {
                    const Token& recv = (*toks_)[i - 2];
                    if (recv.is("this")) {
                        m.usages.push_back({Usage::Kind::OwnField, "", t.text, 0, t.line});
                    } else if (recv.is_ident() && !kKeywords.count(recv.text) &&
                               !(i >= 3 && (*toks_)[i - 3].is(".")) && !nx.is(".")) {
                        auto sym = symbols.find(recv.text);
                        if (sym != symbols.end())
                            m.usages.push_back({Usage::Kind::VarField, sym->second, t.text, 0, t.line});
                        else if (own_fields.count(recv.text))
                            m.usages.push_back({Usage::Kind::VarField, "$field:" + recv.text, t.text, 0, t.line});
                        else
                            m.usages.push_back({Usage::Kind::ClassField, recv.text, t.text, 0, t.line});
                    }
                } else if (own_fields.count(t.text) && !symbols.count(t.text) && !nx.is(".")) {
                    m.usages.push_back({Usage::Kind::OwnField, "", t.text, 0, t.line});
                }
            }

            stmt_start = t.is(";") || t.is("{") || t.is("}") || t.is(")") || t.is("else") ||
                         t.is("do") || t.is("try") || t.is("finally") || t.is(":");
        }
    }

    const SourceUnit& unit_;
    std::size_t unit_index_;
    std::vector<ParseDiagnostic>& diags_;
    LexResult lex_;
    const std::vector<Token>* toks_;
    std::size_t pos_ = 0;
    std::string package_;
    std::map<std::string, std::string> imports_;
};

// ---------------------------------------------------------------------------
// Resolution / model assembly
// ---------------------------------------------------------------------------

class Resolver {
public:
    Resolver(std::vector<RawClass>& raw, const std::vector<SourceUnit>& units,
             std::vector<ParseDiagnostic>& diags)
        : raw_(raw), units_(units), diags_(diags) {
        for (const auto& rc : raw_) {
            std::string qn = qualified(rc);
            by_qualified_[qn] = &rc;
            by_simple_[rc.simple_name].push_back(qn);
        }
    }

    static std::string qualified(const RawClass& rc) {
        return rc.package.empty() ? rc.simple_name : rc.package + "." + rc.simple_name;
    }

    // Resolution order: exact qualified match, same package, unit import,
    // unique simple-name match anywhere. Empty result means external.
    std::string resolve_type(const std::string& raw_type, const RawClass& ctx) const {
        std::string t = raw_type;
        while (t.size() >= 2 && t.substr(t.size() - 2) == "[]") t.resize(t.size() - 2);
        if (t.empty() || kPrimitives.count(t) || t == "String") return "";
        if (by_qualified_.count(t)) return t;
        if (t.find('.') == std::string::npos) {
            std::string same_pkg = ctx.package.empty() ? t : ctx.package + "." + t;
            if (by_qualified_.count(same_pkg)) return same_pkg;
            auto imp = ctx.imports.find(t);
            if (imp != ctx.imports.end() && by_qualified_.count(imp->second)) return imp->second;
            auto it = by_simple_.find(t);
            if (it != by_simple_.end() && it->second.size() == 1) return it->second.front();
        }
        return "";
    }

    CodeModel assemble() {
        CodeModel model;
        // First pass: classes with resolved parents and attribute types.
        for (const auto& rc : raw_) {
            ClassInfo c;
            c.qualified_name = qualified(rc);
            c.package = rc.package;
            c.is_abstract = rc.is_abstract;
            for (const auto& p : rc.raw_parents) {
                std::string r = resolve_type(p, rc);
                c.parents.push_back(r.empty() ? p : r);  // unresolved names stay as written (external)
            }
            for (auto a : rc.attributes) {
                std::string r = resolve_type(a.type_name, rc);
                if (!r.empty()) a.type_name = r;
                if (c.find_attribute(a.name)) {
                    warn(rc, 0, "duplicate attribute '" + a.name + "' dropped");
                    continue;
                }
                c.attributes.push_back(std::move(a));
            }
            assign_lines(c, rc);
            model.classes.push_back(std::move(c));
        }
        // In-model parent chains, for member lookup across inheritance.
        for (auto& c : model.classes) class_by_name_[c.qualified_name] = &c;

        // Second pass: methods and resolved usage records.
        for (const auto& rc : raw_) {
            ClassInfo& c = *class_by_name_[qualified(rc)];
            for (const auto& rm : rc.methods) {
                MethodInfo m;
                m.name = rm.name;
                for (const auto& [pt, pn] : rm.params) {
                    std::string r = resolve_type(pt, rc);
                    m.param_type_names.push_back(r.empty() ? pt : r);
                }
                m.visibility = rm.visibility;
                m.is_abstract = rm.is_abstract;
                m.is_constructor = rm.is_constructor;
                m.cyclomatic = rm.is_abstract ? 0 : 1 + rm.decision_points;
                m.statements = rm.is_abstract ? 0 : rm.statements;
                if (c.find_method(m.name, m.arity())) {
                    warn(rc, 0, "duplicate method '" + m.name + "/" + std::to_string(m.arity()) + "' dropped");
                    continue;
                }
                c.methods.push_back(std::move(m));
            }
        }
        for (const auto& rc : raw_) {
            ClassInfo& c = *class_by_name_[qualified(rc)];
            for (const auto& rm : rc.methods) {
                MethodInfo* m = const_cast<MethodInfo*>(c.find_method(
                    rm.name, rm.params.size()));
                if (!m) continue;
                resolve_usages(rc, c, rm, *m);
            }
        }
        return model;
    }

private:
    void warn(const RawClass& rc, int line, const std::string& msg) {
        diags_.push_back({units_[rc.unit_index].path, line > 0 ? line : rc.start_line, 1, msg,
                          ParseDiagnostic::Severity::Warning});
    }

    void assign_lines(ClassInfo& c, const RawClass& rc) {
        // Single-class units attribute the whole file to the class, so file
        // and class line counts agree for the common one-class-per-file case.
        std::size_t classes_in_unit = 0;
        for (const auto& other : raw_)
            if (other.unit_index == rc.unit_index) ++classes_in_unit;
        const LexResult& lr = unit_lex(rc.unit_index);
        if (classes_in_unit == 1) {
            c.total_lines = static_cast<std::uint32_t>(lr.line_count);
            c.comment_lines = static_cast<std::uint32_t>(lr.comment_lines.size());
        } else {
            c.total_lines = static_cast<std::uint32_t>(rc.end_line - rc.start_line + 1);
            c.comment_lines = static_cast<std::uint32_t>(std::count_if(
                lr.comment_lines.begin(), lr.comment_lines.end(),
                [&](int l) { return l >= rc.start_line && l <= rc.end_line; }));
        }
    }

    const LexResult& unit_lex(std::size_t idx) {
        auto it = unit_lex_.find(idx);
        if (it == unit_lex_.end()) it = unit_lex_.emplace(idx, lex(units_[idx].text)).first;
        return it->second;
    }

    // Walks cls then its in-model ancestors; returns the declaring class of
    // (name, arity), or nullptr.
    const ClassInfo* find_declaring_method(const ClassInfo* cls, const std::string& name,
                                           std::size_t arity) const {
        std::set<const ClassInfo*> seen;
        std::vector<const ClassInfo*> queue{cls};
        while (!queue.empty()) {
            const ClassInfo* c = queue.front();
            queue.erase(queue.begin());
            if (!seen.insert(c).second) continue;
            if (c->find_method(name, arity)) return c;
            for (const auto& p : c->parents) {
                auto it = class_by_name_.find(p);
                if (it != class_by_name_.end()) queue.push_back(it->second);
            }
        }
        return nullptr;
    }

    const ClassInfo* find_declaring_attribute(const ClassInfo* cls, const std::string& name) const {
        std::set<const ClassInfo*> seen;
        std::vector<const ClassInfo*> queue{cls};
        while (!queue.empty()) {
            const ClassInfo* c = queue.front();
            queue.erase(queue.begin());
            if (!seen.insert(c).second) continue;
            if (c->find_attribute(name)) return c;
            for (const auto& p : c->parents) {
                auto it = class_by_name_.find(p);
                if (it != class_by_name_.end()) queue.push_back(it->second);
            }
        }
        return nullptr;
    }

    const ClassInfo* resolve_receiver(const Usage& u, const RawClass& rc, const ClassInfo& own) {
        std::string raw = u.recv;
        if (raw.rfind("$field:", 0) == 0) {
            const AttributeInfo* a = own.find_attribute(raw.substr(7));
            if (!a) return nullptr;
            raw = a->type_name;
        }
        std::string q = resolve_type(raw, rc);
        if (q.empty()) return nullptr;
        auto it = class_by_name_.find(q);
        return it == class_by_name_.end() ? nullptr : it->second;
    }

    void resolve_usages(const RawClass& rc, ClassInfo& own, const RawMethod& rm, MethodInfo& m) {
        std::map<std::pair<std::string, std::string>, std::uint32_t> calls;  // (class, sig) -> sites
        std::set<AttributeRef> attr_refs;
        for (const auto& u : rm.usages) {
            switch (u.kind) {
                case Usage::Kind::OwnCall: {
                    const ClassInfo* decl = find_declaring_method(&own, u.name, u.arity);
                    if (!decl) {
                        warn(rc, u.line, "unresolved call " + u.name + "/" + std::to_string(u.arity) +
                                             " in " + own.qualified_name + "::" + m.name + "; dropped");
                        break;
                    }
                    const MethodInfo* target = decl->find_method(u.name, u.arity);
                    ++calls[{decl->qualified_name, target->signature()}];
                    break;
                }
                case Usage::Kind::VarCall:
                case Usage::Kind::ClassCall: {
                    const ClassInfo* recv = resolve_receiver(u, rc, own);
                    if (!recv) {
                        if (u.kind == Usage::Kind::VarCall)
                            warn(rc, u.line, "call " + u.name + " on receiver of non-model type '" + u.recv +
                                                 "' in " + own.qualified_name + "::" + m.name + "; dropped");
                        // ClassCall misses are usually library statics; stay quiet
                        break;
                    }
                    const ClassInfo* decl = find_declaring_method(recv, u.name, u.arity);
                    if (!decl) {
                        warn(rc, u.line, "unresolved call " + recv->qualified_name + "." + u.name + "/" +
                                             std::to_string(u.arity) + " in " + own.qualified_name +
                                             "::" + m.name + "; dropped");
                        break;
                    }
                    ++calls[{decl->qualified_name, decl->find_method(u.name, u.arity)->signature()}];
                    break;
                }
                case Usage::Kind::CtorCall: {
                    std::string q = resolve_type(u.recv, rc);
                    if (q.empty()) break;  // external construction
                    const ClassInfo* recv = class_by_name_.at(q);
                    // implicit default constructors are not declared methods
                    for (const auto& cm : recv->methods) {
                        if (cm.is_constructor && cm.arity() == u.arity) {
                            ++calls[{recv->qualified_name, cm.signature()}];
                            break;
                        }
                    }
                    break;
                }
                case Usage::Kind::OwnField: {
                    const ClassInfo* decl = find_declaring_attribute(&own, u.name);
                    if (!decl) break;  // bare identifier that is not a field
                    attr_refs.insert({decl->qualified_name, u.name});
                    break;
                }
                case Usage::Kind::VarField:
                case Usage::Kind::ClassField: {
                    const ClassInfo* recv = resolve_receiver(u, rc, own);
                    if (!recv) {
                        if (u.kind == Usage::Kind::VarField)
                            warn(rc, u.line, "field access ." + u.name + " on receiver of non-model type '" +
                                                 u.recv + "' in " + own.qualified_name + "::" + m.name +
                                                 "; dropped");
                        break;
                    }
                    const ClassInfo* decl = find_declaring_attribute(recv, u.name);
                    if (!decl) {
                        warn(rc, u.line, "unresolved field " + recv->qualified_name + "." + u.name + " in " +
                                             own.qualified_name + "::" + m.name + "; dropped");
                        break;
                    }
                    attr_refs.insert({decl->qualified_name, u.name});
                    break;
                }
            }
        }
        for (const auto& [key, sites] : calls)
            m.invocations.push_back(Invocation{key.first, key.second, sites});
        m.referenced_attributes.assign(attr_refs.begin(), attr_refs.end());
    }

    std::vector<RawClass>& raw_;
    const std::vector<SourceUnit>& units_;
    std::vector<ParseDiagnostic>& diags_;
    std::map<std::string, const RawClass*> by_qualified_;
    std::map<std::string, std::vector<std::string>> by_simple_;
    std::map<std::string, ClassInfo*> class_by_name_;
    std::map<std::size_t, LexResult> unit_lex_;
};

}  // namespace

ParseResult parse_sources(const std::vector<SourceUnit>& units) {
    ParseResult result;
    std::vector<RawClass> raw;
    for (std::size_t i = 0; i < units.size(); ++i) {
        UnitParser up(units[i], i, result.diagnostics);
        auto classes = up.parse();
        // Duplicate class names across units: keep the first, drop the rest.
        for (auto& rc : classes) {
            std::string qn = Resolver::qualified(rc);
            bool dup = std::any_of(raw.begin(), raw.end(),
                                   [&](const RawClass& o) { return Resolver::qualified(o) == qn; });
            if (dup) {
                result.diagnostics.push_back({units[i].path, rc.start_line, 1,
                                              "duplicate class " + qn + " dropped",
                                              ParseDiagnostic::Severity::Warning});
                continue;
            }
            raw.push_back(std::move(rc));
        }
    }
    Resolver resolver(raw, units, result.diagnostics);
    result.model = resolver.assemble();
    validate_model(result.model);
    return result;
}

ParseResult parse_files(const std::vector<std::string>& paths) {
    std::vector<SourceUnit> units;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw std::runtime_error("cannot open source file: " + p);
        std::ostringstream buf;
        buf << in.rdbuf();
        units.push_back(SourceUnit{p, buf.str()});
    }
    return parse_sources(units);
}

double count_comment_ratio(const ClassInfo& cls) {
    return static_cast<double>(cls.comment_lines) /
           static_cast<double>(std::max<std::uint32_t>(cls.total_lines, 1));
}

}  // namespace oometrix
