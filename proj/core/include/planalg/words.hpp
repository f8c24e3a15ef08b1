#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "planalg/gpa.hpp"

namespace planalg {

/// Tangle words build box elements from named inputs:
///   name                    a named input or definition
///   mul(a, b, ...)          product, a at the bottom
///   cup@i(a), cap@i(a)      cup or cap at boundary position i
///   rot(a), rot@k(a)        rotation by one or k steps of two clicks
///   click(a), click@k(a)    one or k clicks
///   adj(a)                  adjoint
///   incl(a)                 a through strand added on the right
///   embed[p1,...,p2n]       Temperley-Lieb diagram by one-based partner list
///   jw@n                    Jones-Wenzl projection f_n
///   unit@n                  unit of P_n
/// embed, jw and unit take an optional ":-" suffix for the minus shading.
class WordEvaluator {
public:
    WordEvaluator(SpinContextPtr ctx, std::map<std::string, GpaElement> inputs);

    void define(const std::string& name, const std::string& word);
    GpaElement evaluate(const std::string& word);
    const SpinContextPtr& context() const { return ctx_; }

private:
    struct Parser;
    SpinContextPtr ctx_;
    std::map<std::string, GpaElement> values_;
    std::map<std::string, std::string> definitions_;
    std::map<std::string, GpaElement> cache_;
};

struct ManifestTerm {
    Scalar coefficient;
    std::string word;
};

/// An identity among box elements. Kind "equal" asserts sum(lhs) = sum(rhs)
/// with fixed coefficients. Kind "in_span" asserts that target lies in the span
/// of the listed words; "tl@n" expands to every Temperley-Lieb diagram and
/// "annular(name)@n" to the independent annular consequences of name.
struct ManifestRelation {
    std::string id;
    std::string kind;
    std::vector<ManifestTerm> lhs;
    std::vector<ManifestTerm> rhs;
    std::string target;
    std::vector<std::string> span;
    std::string description;
};

struct ManifestGenerator {
    std::size_t n = 4;
    Shading shading = Shading::plus;
    Scalar rotation_eigenvalue = Scalar(-1);
    std::string square = "jw@4";
    std::optional<Scalar> normalization;
    std::string description;
};

struct RelationManifest {
    ManifestGenerator generator;
    std::vector<std::pair<std::string, std::string>> definitions;
    std::vector<ManifestRelation> relations;

    static RelationManifest from_json(const std::string& text);
    std::string to_json() const;
};

RelationManifest bundled_manifest();

}  // namespace planalg
