#include "planalg/words.hpp"

#include <cctype>

#include "json_detail.hpp"
#include "planalg/data.hpp"

namespace planalg {

struct WordEvaluator::Parser {
    WordEvaluator& owner;
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::ParseError, "word '" + text + "' at " + std::to_string(pos) + ": " + what);
    }

    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool accept(char c) {
        skip();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        if (pos == start) fail("expected a name");
        return text.substr(start, pos - start);
    }

    long integer() {
        skip();
        const std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && text[start] == '-')) fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    Shading shading_suffix() {
        skip();
        if (pos + 1 < text.size() && text[pos] == ':') {
            pos += 1;
            if (text[pos] == '-') {
                ++pos;
                return Shading::minus;
            }
            if (text[pos] == '+') {
                ++pos;
                return Shading::plus;
            }
            fail("expected shading + or -");
        }
        return Shading::plus;
    }

    std::optional<long> at_suffix() {
        if (accept('@')) return integer();
        return std::nullopt;
    }

    GpaElement argument() {
        expect('(');
        GpaElement x = expression();
        expect(')');
        return x;
    }

    GpaElement expression() {
        const std::string name = identifier();
        const SpinContextPtr& ctx = owner.ctx_;
        if (name == "mul") {
            expect('(');
            GpaElement x = expression();
            while (accept(',')) x = multiply(x, expression());
            expect(')');
            return x;
        }
        if (name == "cup" || name == "cap") {
            auto i = at_suffix();
            if (!i || *i < 1) fail(name + " needs a position");
            GpaElement x = argument();
            return name == "cup" ? cup(x, static_cast<std::size_t>(*i)) : cap(x, static_cast<std::size_t>(*i));
        }
        if (name == "rot" || name == "click") {
            const long k = at_suffix().value_or(1);
            GpaElement x = argument();
            return name == "rot" ? rotate(x, k) : click(x, k);
        }
        if (name == "adj") return adjoint(argument());
        if (name == "incl") return include(argument());
        if (name == "embed") {
            expect('[');
            std::vector<int> partners;
            if (!accept(']')) {
                do {
                    partners.push_back(static_cast<int>(integer()));
                } while (accept(','));
                expect(']');
            }
            const Shading s = shading_suffix();
            return tl_embed(ctx, TLDiagram::from_list(partners), s);
        }
        if (name == "jw" || name == "unit") {
            auto n = at_suffix();
            if (!n || *n < 0) fail(name + " needs a size");
            const Shading s = shading_suffix();
            const auto size = static_cast<std::size_t>(*n);
            if (name == "unit") return GpaElement::unit(ctx, size, s);
            return tl_embed(ctx, jones_wenzl(size, ctx->delta()), s);
        }
        if (!owner.values_.count(name) && !owner.definitions_.count(name)) fail("unknown name " + name);
        return owner.evaluate(name);
    }
};

WordEvaluator::WordEvaluator(SpinContextPtr ctx, std::map<std::string, GpaElement> inputs)
    : ctx_(std::move(ctx)), values_(std::move(inputs)) {}

void WordEvaluator::define(const std::string& name, const std::string& word) {
    if (values_.count(name) || definitions_.count(name)) throw Error(ErrorCode::ParseError, "name defined twice: " + name);
    definitions_[name] = word;
}

GpaElement WordEvaluator::evaluate(const std::string& word) {
    if (auto it = values_.find(word); it != values_.end()) return it->second;
    if (auto it = cache_.find(word); it != cache_.end()) return it->second;
    GpaElement result;
    if (auto it = definitions_.find(word); it != definitions_.end()) {
        const std::string body = it->second;
        // Removing the definition while it expands rejects self-reference.
        definitions_.erase(it);
        try {
            result = evaluate(body);
        } catch (...) {
            definitions_[word] = body;
            throw;
        }
        definitions_[word] = body;
    } else {
        Parser p{*this, word};
        result = p.expression();
        p.skip();
        if (p.pos != word.size()) p.fail("trailing text");
    }
    cache_[word] = result;
    return result;
}

// ---------------------------------------------------------------------------
// Manifest

namespace {

using detail::json;

std::vector<ManifestTerm> terms_from_json(const json& j) {
    std::vector<ManifestTerm> out;
    if (j.is_string()) {
        out.push_back({Scalar(1), j.get<std::string>()});
        return out;
    }
    for (const auto& t : j) {
        if (t.is_string()) {
            out.push_back({Scalar(1), t.get<std::string>()});
        } else {
            out.push_back({t.contains("coeff") ? detail::scalar_from_json(t.at("coeff")) : Scalar(1),
                           t.at("word").get<std::string>()});
        }
    }
    return out;
}

json terms_to_json(const std::vector<ManifestTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms) {
        json e;
        e["coeff"] = detail::scalar_to_json(t.coefficient);
        e["word"] = t.word;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

RelationManifest RelationManifest::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("manifest JSON: ") + e.what());
    }
    RelationManifest m;
    try {
        if (j.contains("generator")) {
            const json& g = j.at("generator");
            m.generator.n = g.value("n", std::size_t{4});
            m.generator.shading = shading_from_string(g.value("shading", std::string("+")));
            if (g.contains("rotation_eigenvalue"))
                m.generator.rotation_eigenvalue = detail::scalar_from_json(g.at("rotation_eigenvalue"));
            m.generator.square = g.value("square", std::string("jw@4"));
            if (g.contains("normalization")) m.generator.normalization = detail::scalar_from_json(g.at("normalization"));
            m.generator.description = g.value("description", std::string());
        }
        if (j.contains("definitions")) {
            for (const auto& d : j.at("definitions")) m.definitions.emplace_back(d.at("name").get<std::string>(), d.at("word").get<std::string>());
        }
        const json& list = j.is_array() ? j : j.at("relations");
        for (const auto& r : list) {
            ManifestRelation rel;
            rel.id = r.at("id").get<std::string>();
            rel.kind = r.value("kind", std::string("equal"));
            rel.description = r.value("section_quote", std::string());
            if (rel.kind == "equal") {
                rel.lhs = terms_from_json(r.at("lhs"));
                rel.rhs = terms_from_json(r.at("rhs"));
            } else if (rel.kind == "in_span") {
                rel.target = r.at("target").get<std::string>();
                rel.span = r.at("span").get<std::vector<std::string>>();
            } else {
                throw Error(ErrorCode::ParseError, "unknown relation kind: " + rel.kind);
            }
            m.relations.push_back(std::move(rel));
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("manifest JSON: ") + e.what());
    }
    return m;
}

std::string RelationManifest::to_json() const {
    json j;
    json g;
    g["n"] = generator.n;
    g["shading"] = planalg::to_string(generator.shading);
    g["rotation_eigenvalue"] = detail::scalar_to_json(generator.rotation_eigenvalue);
    g["square"] = generator.square;
    if (generator.normalization) g["normalization"] = detail::scalar_to_json(*generator.normalization);
    g["description"] = generator.description;
    j["generator"] = std::move(g);
    json defs = json::array();
    for (const auto& [name, word] : definitions) defs.push_back({{"name", name}, {"word", word}});
    j["definitions"] = std::move(defs);
    json rels = json::array();
    for (const auto& r : relations) {
        json e;
        e["id"] = r.id;
        e["kind"] = r.kind;
        if (r.kind == "equal") {
            e["lhs"] = terms_to_json(r.lhs);
            e["rhs"] = terms_to_json(r.rhs);
        } else {
            e["target"] = r.target;
            e["span"] = r.span;
        }
        e["section_quote"] = r.description;
        rels.push_back(std::move(e));
    }
    j["relations"] = std::move(rels);
    return j.dump(2);
}

RelationManifest bundled_manifest() { return RelationManifest::from_json(bundled_manifest_json()); }

}  // namespace planalg
