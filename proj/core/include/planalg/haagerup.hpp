#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planalg/atl.hpp"
#include "planalg/gpa.hpp"
#include "planalg/words.hpp"

namespace planalg {

/// What selects the generator inside the low-weight space.
struct GeneratorSpec {
    std::size_t n = 4;
    Shading shading = Shading::plus;
    /// Order of the rotation eigenvalue: 1 for +1, 2 for -1.
    unsigned rotation_order = 2;
    /// The generator squares to the Jones-Wenzl projection f_n.
    bool square_is_jones_wenzl = true;
    SqrtOptions sqrt_options{3, true, 0};
};

struct GeneratorCandidate {
    GpaElement element;
    Scalar rotation_eigenvalue;
    /// <T, T>.
    Scalar normalization;
    std::string selection_note;
    std::size_t low_weight_dimension = 0;
    std::size_t eigenspace_dimension = 0;
    std::size_t self_adjoint_real_dimension = 0;
    std::size_t self_adjoint_imaginary_dimension = 0;
};

GeneratorCandidate find_generator(const SpinContextPtr& ctx, const GeneratorSpec& spec = {});

enum class Certification { exact_zero, interval_bounded, failed };
const char* to_string(Certification c);

struct RelationReport {
    std::string id;
    std::vector<std::pair<std::string, Scalar>> coefficients;
    Scalar residual_norm;
    Certification certification = Certification::failed;
    std::string note;

    bool certified() const { return certification != Certification::failed; }
    std::string to_json() const;
};

/// Residual tolerance for interval-valued checks: 2^-60.
struct VerifyOptions {
    unsigned tolerance_bits = 60;
    unsigned precision_bits = 256;
    unsigned max_precision_bits = 4096;
};

/// Certifies that an element vanishes: exact structural zero, or every entry
/// enclosed within 2^-tolerance_bits of zero.
RelationReport certify_zero(const std::string& id, const GpaElement& residual, const VerifyOptions& options = {});
RelationReport certify_scalar_zero(const std::string& id, const Scalar& residual, const VerifyOptions& options = {});

std::vector<RelationReport> verify_generator(const GeneratorCandidate& c, const VerifyOptions& options = {});
/// Projects T^2 onto span(TL_n embeds, T) through dual bases.
RelationReport relation_4box(const GeneratorCandidate& c, const VerifyOptions& options = {});
/// Evaluates every identity of the manifest with T bound to the candidate.
std::vector<RelationReport> relations_56(const GeneratorCandidate& c, const RelationManifest& manifest,
                                         const VerifyOptions& options = {},
                                         const GeneratorCandidate* exact = nullptr);

struct MomentTable {
    std::map<int, Scalar> entries;
    std::map<int, Scalar> oracle;
};

MomentTable moments(const GeneratorCandidate& c, int max_k, bool with_oracle = true);

struct AuditRow {
    std::size_t n = 0;
    std::size_t tl_dimension = 0;
    Integer catalan;
    std::size_t span_dimension = 0;
    Integer base_loop_count;
};

std::vector<AuditRow> dimension_audit(const GeneratorCandidate& c, std::size_t max_n);

struct ScanRow {
    std::size_t n = 0;
    Shading shading = Shading::plus;
    std::size_t low_weight_dimension = 0;
    /// (order, multiplicity of each eigenvalue of that order).
    std::vector<std::pair<unsigned, std::size_t>> eigenvalues;
};

struct ScanReport {
    Scalar delta;
    bool below_two = false;
    std::vector<ScanRow> rows;
};

ScanReport scan_graph(const BipartiteGraph& g, std::size_t n_max, const NormOptions& options = {});

/// Generator selection read from the manifest.
GeneratorSpec generator_spec(const RelationManifest& manifest);

struct PipelineOptions {
    /// Evaluate every check on interval enclosures of T instead of tower elements.
    bool interval_only = false;
    VerifyOptions verify;
    std::size_t max_n = 4;
    int max_k = 4;
};

struct PipelineReport {
    GeneratorCandidate candidate;
    std::vector<RelationReport> checks;
    MomentTable moments;
    std::vector<AuditRow> audit;
    /// Precision of the last interval pass; 0 in exact mode.
    unsigned precision_bits = 0;

    bool ok() const;
    /// Id of the first check that did not certify, empty when all did.
    std::string first_failure() const;
    std::string to_json() const;
};

/// find_generator, verify_generator, relation_4box, relations_56, moments and
/// dimension_audit in sequence. In interval mode the precision doubles after a
/// failed pass until options.verify.max_precision_bits.
PipelineReport verify_all(const SpinContextPtr& ctx, const RelationManifest& manifest,
                          const PipelineOptions& options = {});

}  // namespace planalg
