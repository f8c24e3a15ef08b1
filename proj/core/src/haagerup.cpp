#include "planalg/haagerup.hpp"

#include <algorithm>
#include <sstream>

#include "json_detail.hpp"
#include "planalg/oracle.hpp"

namespace planalg {

namespace {

SparseVector sparse_of(const GpaElement& x) {
    SparseVector out;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), x[i]);
    return out;
}

Scalar imaginary_unit_part(const Scalar& x) { return (x - x.conj()) / Scalar(2); }

Scalar real_part(const Scalar& x) { return (x + x.conj()) / Scalar(2); }

/// Sign of the imaginary part of x, read from its complex enclosure.
Sign imaginary_sign(const Scalar& x) {
    const Scalar y = imaginary_unit_part(x);
    if (y.is_exact() && y.is_zero()) return Sign::zero;
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        CertInterval iv = to_interval(y, bits);
        if (!iv.has_imaginary()) continue;
        if (iv.imag_lower().sign() > 0) return Sign::positive;
        if (iv.imag_upper().sign() < 0) return Sign::negative;
    }
    throw Error(ErrorCode::Undecided, "imaginary part sign undecided");
}

/// Reinterprets an element of tower F(s) with only s-free terms as an element of F.
Scalar drop_top(const Scalar& x, const TowerPtr& base) {
    if (!x.is_tower()) return x;
    const TowerElement& t = x.tower_element();
    const std::uint32_t half = base->dimension();
    TermList terms;
    for (const auto& term : t.terms()) {
        if (term.index >= half) throw Error(ErrorCode::InvalidArgument, "element uses the top radical");
        terms.push_back(term);
    }
    if (base->depth() == 0) return terms.empty() ? Scalar(0) : Scalar(terms.front().coeff);
    return Scalar(TowerElement(base, terms));
}

bool uses_top(const Scalar& x, std::uint32_t half) {
    if (!x.is_tower()) return false;
    for (const auto& t : x.tower_element().terms())
        if (t.index >= half) return true;
    return false;
}

bool only_top(const Scalar& x, std::uint32_t half) {
    if (x.is_zero()) return true;
    if (!x.is_tower()) return false;
    for (const auto& t : x.tower_element().terms())
        if (t.index < half) return false;
    return true;
}

using SymMatrix = std::vector<std::vector<Scalar>>;

bool rank_at_most_one(const SymMatrix& m) {
    const std::size_t k = m.size();
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = 0; c < k; ++c)
                for (std::size_t d = c + 1; d < k; ++d)
                    if (!(m[a][c] * m[b][d] - m[a][d] * m[b][c]).is_zero()) return false;
    return true;
}

SymMatrix combine(const SymMatrix& a, const SymMatrix& b, const Scalar& t) {
    SymMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j] + t * b[i][j];
    return out;
}

bool is_nonzero_matrix(const SymMatrix& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!v.is_zero()) return true;
    return false;
}

std::vector<SymMatrix> rank_one_points(const SymMatrix& a, const SymMatrix& b, const SqrtOptions& sqrt_options) {
    std::vector<SymMatrix> out;
    if (rank_at_most_one(b) && is_nonzero_matrix(b)) out.push_back(b);
    const std::size_t k = a.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            for (std::size_t p = 0; p < k; ++p)
                for (std::size_t q = p + 1; q < k; ++q) {
                    // det [[a_ip + t b_ip, a_iq + t b_iq], [a_jp + t b_jp, a_jq + t b_jq]]
                    const Scalar c2 = b[i][p] * b[j][q] - b[i][q] * b[j][p];
                    const Scalar c1 = a[i][p] * b[j][q] + b[i][p] * a[j][q] - a[i][q] * b[j][p] - b[i][q] * a[j][p];
                    const Scalar c0 = a[i][p] * a[j][q] - a[i][q] * a[j][p];
                    if (c2.is_zero() && c1.is_zero()) continue;
                    std::vector<Scalar> roots;
                    if (c2.is_zero()) {
                        roots.push_back(-c0 / c1);
                    } else {
                        const Scalar disc = c1 * c1 - Scalar(4) * c2 * c0;
                        if (certified_sign(disc) == Sign::negative) return out;
                        const Scalar s = exact_sqrt_or_adjoin(disc, sqrt_options);
                        roots.push_back((-c1 + s) / (Scalar(2) * c2));
                        if (!s.is_zero()) roots.push_back((-c1 - s) / (Scalar(2) * c2));
                    }
                    for (const auto& t : roots) {
                        SymMatrix m = combine(a, b, t);
                        if (is_nonzero_matrix(m) && rank_at_most_one(m)) out.push_back(std::move(m));
                    }
                    return out;
                }
    if (rank_at_most_one(a) && is_nonzero_matrix(a)) out.push_back(a);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generator

GeneratorCandidate find_generator(const SpinContextPtr& ctx, const GeneratorSpec& spec) {
    GeneratorCandidate out;
    const LowWeightSpace space = low_weight_space(ctx, spec.n, spec.shading);
    out.low_weight_dimension = space.dimension();
    if (space.dimension() == 0) throw Error(ErrorCode::NoCandidate, "the low-weight space is zero");
    std::vector<GpaElement> eigen;
    for (auto& cls : rotation_eigenspaces(space))
        if (cls.order == spec.rotation_order) eigen = std::move(cls.basis);
    out.eigenspace_dimension = eigen.size();
    if (eigen.empty() || spec.rotation_order > 2)
        throw Error(ErrorCode::NoCandidate, "no rotation eigenvectors with the requested eigenvalue");
    out.rotation_eigenvalue = spec.rotation_order == 1 ? Scalar(1) : Scalar(-1);

    // Self-adjoint elements are sym + i * anti with real coefficients.
    const std::size_t width = eigen.front().size();
    EchelonBasis sym_basis(width), anti_basis(width);
    std::vector<GpaElement> sym, anti;
    for (const auto& e : eigen) {
        GpaElement s = e + adjoint(e);
        GpaElement a = e - adjoint(e);
        if (sym_basis.insert(sparse_of(s))) sym.push_back(std::move(s));
        if (anti_basis.insert(sparse_of(a))) anti.push_back(std::move(a));
    }
    out.self_adjoint_real_dimension = sym.size();
    out.self_adjoint_imaginary_dimension = anti.size();
    std::vector<const GpaElement*> w;
    std::vector<bool> imaginary;
    for (const auto& s : sym) {
        w.push_back(&s);
        imaginary.push_back(false);
    }
    for (const auto& a : anti) {
        w.push_back(&a);
        imaginary.push_back(true);
    }
    const std::size_t k = w.size();

    // Linearize T^2 in span(TL) over the symmetric products of the basis.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<GpaElement> re_parts, im_parts;
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = j; l < k; ++l) {
            GpaElement p = multiply(*w[j], *w[l]);
            if (l != j) p += multiply(*w[l], *w[j]);
            GpaElement zero(ctx, spec.n, spec.shading);
            const bool im = imaginary[j] != imaginary[l];
            if (imaginary[j] && imaginary[l]) p = -p;
            re_parts.push_back(im ? zero : p);
            im_parts.push_back(im ? p : zero);
            pairs.emplace_back(j, l);
        }
    }
    std::vector<GpaElement> tl;
    for (const auto& d : all_diagrams(spec.n)) tl.push_back(tl_embed(ctx, d, spec.shading));
    const std::size_t np = pairs.size(), nt = tl.size();
    EchelonBasis equations(np + 2 * nt);
    for (int part = 0; part < 2; ++part) {
        const auto& products = part == 0 ? re_parts : im_parts;
        for (std::size_t q = 0; q < width; ++q) {
            SparseVector row;
            for (std::size_t c = 0; c < np; ++c)
                if (!products[c][q].is_zero()) row.emplace_back(static_cast<std::uint32_t>(c), products[c][q]);
            for (std::size_t d = 0; d < nt; ++d)
                if (!tl[d][q].is_zero())
                    row.emplace_back(static_cast<std::uint32_t>(np + part * nt + d), -tl[d][q]);
            if (!row.empty()) equations.insert(std::move(row));
        }
    }
    std::vector<SymMatrix> kernel;
    for (const auto& v : equations.nullspace()) {
        SymMatrix m(k, std::vector<Scalar>(k, Scalar(0)));
        bool any = false;
        for (const auto& [c, val] : v) {
            if (c >= np) continue;
            auto [j, l] = pairs[c];
            m[j][l] = val;
            m[l][j] = val;
            any = true;
        }
        if (any) kernel.push_back(std::move(m));
    }
    if (kernel.empty()) throw Error(ErrorCode::NoCandidate, "no self-adjoint eigenvector squares into Temperley-Lieb");
    if (kernel.size() > 2)
        throw Error(ErrorCode::AmbiguousCandidate,
                    "the quadratic condition leaves a " + std::to_string(kernel.size()) + "-dimensional family");
    std::vector<SymMatrix> points;
    if (kernel.size() == 1) {
        if (rank_at_most_one(kernel[0])) points.push_back(kernel[0]);
    } else {
        points = rank_one_points(kernel[0], kernel[1], spec.sqrt_options);
    }
    if (points.empty()) throw Error(ErrorCode::NoCandidate, "no rank-one solution of the quadratic condition");
    const SymMatrix& x = points.front();

    std::size_t pivot = 0;
    while (pivot < k && x[pivot][pivot].is_zero()) ++pivot;
    GpaElement re(ctx, spec.n, spec.shading), im(ctx, spec.n, spec.shading);
    for (std::size_t j = 0; j < k; ++j) {
        if (x[j][pivot].is_zero()) continue;
        (imaginary[j] ? im : re) += w[j]->scaled(x[j][pivot]);
    }
    const LoopSpace& sp = re.space();
    std::size_t anchor = sp.size();
    for (std::size_t q = 0; q < sp.size() && anchor == sp.size(); ++q)
        if (sp.reversed(q) == q && !re[q].is_zero()) anchor = q;
    if (anchor < sp.size()) {
        const Scalar inv = Scalar(1) / re[anchor];
        re = re.scaled(inv);
        im = im.scaled(inv);
    }

    GpaElement t = re;
    if (!im.is_zero()) {
        TowerPtr top;
        for (const auto& s : re.entries())
            if (s.is_tower()) top = top ? common_tower(top, s.tower()) : s.tower();
        for (const auto& s : im.entries())
            if (s.is_tower()) top = top ? common_tower(top, s.tower()) : s.tower();
        bool split = top && top->depth() > 0 && !top->imaginary(top->depth() - 1);
        const std::uint32_t half = split ? top->dimension() / 2 : 0;
        if (split) {
            for (const auto& s : re.entries()) split = split && !uses_top(s, half);
            for (const auto& s : im.entries()) split = split && only_top(s, half);
        }
        if (split) {
            // im = sqrt(r) * im0 with im0 below the top level; i sqrt(r) = sqrt(-r).
            const TowerPtr base = top->parent();
            const Scalar kappa(TowerElement::generator(top, top->depth() - 1));
            const Scalar r = drop_top(kappa * kappa, base);
            const Scalar iota = exact_sqrt_or_adjoin(-r, SqrtOptions{spec.sqrt_options.max_depth, true, 0});
            t = GpaElement(ctx, spec.n, spec.shading);
            for (std::size_t q = 0; q < t.size(); ++q) {
                Scalar value(0);
                if (!re[q].is_zero()) value += drop_top(re[q], base);
                if (!im[q].is_zero()) value += drop_top(im[q] / kappa, base) * iota;
                t[q] = value;
            }
        } else {
            const Scalar i = exact_sqrt_or_adjoin(Scalar(-1), SqrtOptions{spec.sqrt_options.max_depth, true, 0});
            t = re + im.scaled(i);
        }
    }

    if (spec.square_is_jones_wenzl) {
        const GpaElement f = tl_embed(ctx, jones_wenzl(spec.n, ctx->delta()), spec.shading);
        const GpaElement sq = multiply(t, t);
        std::size_t q = 0;
        while (q < f.size() && f[q].is_zero()) ++q;
        const Scalar lambda = sq[q] / f[q];
        if (!(sq - f.scaled(lambda)).is_zero())
            throw Error(ErrorCode::NoCandidate, "the square of the solution is not a multiple of the Jones-Wenzl projection");
        t = t.scaled(Scalar(1) / exact_sqrt_or_adjoin(lambda, spec.sqrt_options));
    }

    std::ostringstream note;
    std::size_t first_real = t.size(), first_imag = t.size();
    for (std::size_t q = 0; q < t.size(); ++q) {
        if (t[q].is_zero()) continue;
        if (first_real == t.size() && !real_part(t[q]).is_zero()) first_real = q;
        if (first_imag == t.size() && !imaginary_unit_part(t[q]).is_zero()) first_imag = q;
    }
    if (first_real < t.size() && certified_sign(real_part(t[first_real])) == Sign::negative) t = -t;
    if (first_imag < t.size() && imaginary_sign(t[first_imag]) == Sign::negative)
        for (auto& s : t.entries()) s = s.conj();
    note << "sign fixed by a positive real part at loop " << first_real;
    if (first_imag < t.size()) note << "; conjugate fixed by a positive imaginary part at loop " << first_imag;
    note << "; " << points.size() << " rank-one solutions before the tie-break";
    out.selection_note = note.str();
    out.normalization = inner_product(t, t);
    out.element = std::move(t);
    return out;
}

// ---------------------------------------------------------------------------
// Reports

const char* to_string(Certification c) {
    switch (c) {
        case Certification::exact_zero: return "exact-zero";
        case Certification::interval_bounded: return "interval-bounded";
        case Certification::failed: return "failed";
    }
    return "failed";
}

std::string RelationReport::to_json() const {
    detail::json j;
    j["id"] = id;
    j["certification"] = planalg::to_string(certification);
    j["residual_norm"] = detail::scalar_to_json(residual_norm);
    detail::json coeffs = detail::json::array();
    for (const auto& [basis, value] : coefficients)
        coeffs.push_back({{"basis", basis}, {"value", detail::scalar_to_json(value)}});
    j["coefficients"] = std::move(coeffs);
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

namespace {

bool within_tolerance(const Scalar& bound, unsigned tolerance_bits) {
    if (bound.is_exact()) return bound.is_zero();
    BigFloat limit(64);
    mpfr_set_ui_2exp(limit.get(), 1, -static_cast<long>(tolerance_bits), MPFR_RNDN);
    return compare(bound.interval().upper(), limit) <= 0;
}

}  // namespace

RelationReport certify_zero(const std::string& id, const GpaElement& residual, const VerifyOptions& options) {
    RelationReport r;
    r.id = id;
    if (residual.is_exact()) {
        r.certification = residual.is_zero() ? Certification::exact_zero : Certification::failed;
        r.residual_norm = residual.is_zero() ? Scalar(0) : residual.max_abs_bound(options.precision_bits);
        return r;
    }
    r.residual_norm = residual.max_abs_bound(options.precision_bits);
    r.certification = within_tolerance(r.residual_norm, options.tolerance_bits) ? Certification::interval_bounded
                                                                                : Certification::failed;
    return r;
}

RelationReport certify_scalar_zero(const std::string& id, const Scalar& residual, const VerifyOptions& options) {
    RelationReport r;
    r.id = id;
    if (residual.is_exact()) {
        r.certification = residual.is_zero() ? Certification::exact_zero : Certification::failed;
        r.residual_norm = residual.is_zero()
                              ? Scalar(0)
                              : Scalar(CertInterval(to_interval(residual, options.precision_bits).magnitude_bound(),
                                                    to_interval(residual, options.precision_bits).magnitude_bound(),
                                                    options.precision_bits));
        return r;
    }
    BigFloat m = residual.interval().magnitude_bound();
    r.residual_norm = Scalar(CertInterval(m, m, options.precision_bits));
    r.certification = within_tolerance(r.residual_norm, options.tolerance_bits) ? Certification::interval_bounded
                                                                                : Certification::failed;
    return r;
}

std::vector<RelationReport> verify_generator(const GeneratorCandidate& c, const VerifyOptions& options) {
    std::vector<RelationReport> out;
    const GpaElement& t = c.element;
    const SpinContextPtr& ctx = t.context();
    out.push_back(certify_zero("self_adjoint", adjoint(t) - t, options));
    for (std::size_t i = 1; i <= 2 * t.n(); ++i) out.push_back(certify_zero("cap_" + std::to_string(i), cap(t, i), options));
    out.push_back(certify_zero("rotation_eigenvalue", rotate(t) - t.scaled(c.rotation_eigenvalue), options));
    const GpaElement f = tl_embed(ctx, jones_wenzl(t.n(), ctx->delta()), t.shading());
    out.push_back(certify_zero("square_is_jones_wenzl", multiply(t, t) - f, options));
    RelationReport norm =
        certify_scalar_zero("normalization", inner_product(t, t) - quantum_integer(static_cast<long>(t.n()) + 1, ctx->delta()), options);
    norm.coefficients.emplace_back("<T,T>", inner_product(t, t));
    out.push_back(std::move(norm));
    return out;
}

RelationReport relation_4box(const GeneratorCandidate& c, const VerifyOptions& options) {
    const GpaElement& t = c.element;
    const SpinContextPtr& ctx = t.context();
    std::vector<GpaElement> vectors;
    std::vector<std::string> names;
    for (const auto& d : all_diagrams(t.n())) {
        vectors.push_back(tl_embed(ctx, d, t.shading()));
        std::string word = "embed[";
        const auto list = d.to_list();
        for (std::size_t i = 0; i < list.size(); ++i) word += (i ? "," : "") + std::to_string(list[i]);
        names.push_back(word + "]");
    }
    vectors.push_back(t);
    names.push_back("T");
    const DualBasisData duals = dual_basis(vectors);
    Projection p = project_onto_span(multiply(t, t), duals);
    RelationReport r = certify_zero("relation_4box", p.residual, options);
    for (std::size_t i = 0; i < names.size(); ++i) r.coefficients.emplace_back(names[i], p.coefficients[i]);
    return r;
}

namespace {

std::string diagram_word(const TLDiagram& d, Shading s) {
    std::string word = "embed[";
    const auto list = d.to_list();
    for (std::size_t i = 0; i < list.size(); ++i) word += (i ? "," : "") + std::to_string(list[i]);
    word += "]";
    if (s == Shading::minus) word += ":-";
    return word;
}

/// Expands span entries "tl@n", "annular(name)@n" and plain words into words.
std::vector<std::string> expand_span(const std::vector<std::string>& span, WordEvaluator& chooser) {
    std::vector<std::string> words;
    for (const auto& entry : span) {
        Shading s = Shading::plus;
        std::string body = entry;
        if (body.size() > 2 && body.compare(body.size() - 2, 2, ":-") == 0) {
            s = Shading::minus;
            body.resize(body.size() - 2);
        }
        if (body.rfind("tl@", 0) == 0) {
            for (const auto& d : all_diagrams(std::stoul(body.substr(3)))) words.push_back(diagram_word(d, s));
        } else if (body.rfind("annular(", 0) == 0) {
            const auto close = body.find(")@");
            if (close == std::string::npos) throw Error(ErrorCode::ParseError, "bad span entry " + entry);
            const std::string name = body.substr(8, close - 8);
            const std::size_t n = std::stoul(body.substr(close + 2));
            AnnularOptions opts;
            opts.source_name = name;
            opts.base_loops_only = true;
            opts.target_shading = s;
            for (const auto& img : annular_consequences(chooser.evaluate(name), n, opts).images) words.push_back(img.word);
        } else {
            words.push_back(entry);
        }
    }
    return words;
}

WordEvaluator make_evaluator(const GeneratorCandidate& c, const RelationManifest& manifest) {
    WordEvaluator ev(c.element.context(), {{"T", c.element}});
    for (const auto& [name, word] : manifest.definitions) ev.define(name, word);
    return ev;
}

}  // namespace

std::vector<RelationReport> relations_56(const GeneratorCandidate& c, const RelationManifest& manifest,
                                         const VerifyOptions& options, const GeneratorCandidate* exact) {
    if (manifest.relations.empty()) throw Error(ErrorCode::ManifestMissing, "the relation manifest lists no identities");
    WordEvaluator ev = make_evaluator(c, manifest);
    std::optional<WordEvaluator> chooser;
    if (exact != nullptr && exact != &c) chooser.emplace(make_evaluator(*exact, manifest));
    std::vector<RelationReport> out;
    for (const auto& rel : manifest.relations) {
        if (rel.kind == "equal") {
            GpaElement residual;
            bool first = true;
            auto accumulate = [&](const std::vector<ManifestTerm>& terms, bool negate) {
                for (const auto& term : terms) {
                    GpaElement v = ev.evaluate(term.word).scaled(negate ? -term.coefficient : term.coefficient);
                    if (first) {
                        residual = std::move(v);
                        first = false;
                    } else {
                        residual += v;
                    }
                }
            };
            accumulate(rel.lhs, false);
            accumulate(rel.rhs, true);
            RelationReport r = certify_zero(rel.id, residual, options);
            for (const auto& term : rel.rhs) r.coefficients.emplace_back(term.word, term.coefficient);
            r.note = rel.description;
            out.push_back(std::move(r));
        } else {
            const std::vector<std::string> words = expand_span(rel.span, chooser ? *chooser : ev);
            std::vector<GpaElement> vectors;
            for (const auto& w : words) vectors.push_back(ev.evaluate(w));
            Projection p = solve_on_base_loops(ev.evaluate(rel.target), vectors);
            RelationReport r = certify_zero(rel.id, p.residual, options);
            for (std::size_t i = 0; i < words.size(); ++i)
                if (!p.coefficients[i].is_zero()) r.coefficients.emplace_back(words[i], p.coefficients[i]);
            r.note = rel.description;
            out.push_back(std::move(r));
        }
    }
    return out;
}

MomentTable moments(const GeneratorCandidate& c, int max_k, bool with_oracle) {
    MomentTable table;
    GpaElement power = c.element;
    for (int k = 1; k <= max_k; ++k) {
        if (k > 1) power = multiply(power, c.element);
        table.entries[k] = trace(power);
        if (with_oracle) table.oracle[k] = oracle::power_trace(c.element, k);
    }
    return table;
}

std::vector<AuditRow> dimension_audit(const GeneratorCandidate& c, std::size_t max_n) {
    std::vector<AuditRow> rows;
    const GpaElement& t = c.element;
    const SpinContextPtr& ctx = t.context();
    for (std::size_t n = 0; n <= max_n; ++n) {
        AuditRow row;
        row.n = n;
        row.catalan = catalan(n);
        row.base_loop_count = count_loops(ctx->graph(), n, ctx->graph().base());
        std::vector<GpaElement> tl, annular;
        for (const auto& d : all_diagrams(n)) tl.push_back(tl_embed(ctx, d, t.shading()));
        if (n >= t.n()) {
            AnnularOptions opts;
            opts.target_shading = t.shading();
            for (auto& img : annular_consequences(t, n, opts).images) annular.push_back(std::move(img.element));
        }
        std::vector<GpaElement> candidates = tl;
        candidates.insert(candidates.end(), annular.begin(), annular.end());
        if (n <= 4) {
            for (const auto& a : annular) {
                for (const auto& b : tl) {
                    candidates.push_back(multiply(a, b));
                    candidates.push_back(multiply(b, a));
                }
                for (const auto& b : annular) candidates.push_back(multiply(a, b));
            }
        }
        const std::size_t width = candidates.empty() ? 0 : candidates.front().size();
        EchelonBasis tl_echelon(width), echelon(width);
        std::vector<GpaElement> independent;
        for (const auto& v : tl) tl_echelon.insert(sparse_of(v));
        for (const auto& v : candidates)
            if (echelon.insert(sparse_of(v))) independent.push_back(v);
        row.tl_dimension = tl_echelon.rank();
        // The Gram determinant of the independent family certifies the rank.
        if (!independent.empty() && determinant(gram_matrix(independent)).is_zero())
            throw Error(ErrorCode::SingularGram, "independent family has a singular Gram matrix");
        row.span_dimension = independent.size();
        rows.push_back(std::move(row));
    }
    return rows;
}

ScanReport scan_graph(const BipartiteGraph& g, std::size_t n_max, const NormOptions& options) {
    ScanReport report;
    auto ctx = SpinContext::create(g, options);
    report.delta = ctx->delta();
    report.below_two = certified_sign(ctx->delta() - Scalar(2)) == Sign::negative;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (Shading s : {Shading::plus, Shading::minus}) {
            ScanRow row;
            row.n = n;
            row.shading = s;
            const LowWeightSpace space = low_weight_space(ctx, n, s);
            row.low_weight_dimension = space.dimension();
            for (const auto& cls : rotation_eigenspaces(space)) row.eigenvalues.emplace_back(cls.order, cls.multiplicity);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

GeneratorSpec generator_spec(const RelationManifest& manifest) {
    GeneratorSpec spec;
    spec.n = manifest.generator.n;
    spec.shading = manifest.generator.shading;
    const Scalar& w = manifest.generator.rotation_eigenvalue;
    if (w == Scalar(1)) {
        spec.rotation_order = 1;
    } else if (w == Scalar(-1)) {
        spec.rotation_order = 2;
    } else {
        throw Error(ErrorCode::InvalidArgument, "rotation eigenvalue must be 1 or -1");
    }
    spec.square_is_jones_wenzl = manifest.generator.square == "jw@" + std::to_string(spec.n);
    return spec;
}

bool PipelineReport::ok() const { return first_failure().empty(); }

std::string PipelineReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.certified()) return c.id;
    return {};
}

std::string PipelineReport::to_json() const {
    detail::json j;
    j["generator"] = detail::json::parse(candidate.element.to_json());
    j["normalization"] = detail::scalar_to_json(candidate.normalization);
    j["selection_note"] = candidate.selection_note;
    j["low_weight_dimension"] = candidate.low_weight_dimension;
    j["eigenspace_dimension"] = candidate.eigenspace_dimension;
    j["precision_bits"] = precision_bits;
    detail::json cs = detail::json::array();
    for (const auto& c : checks) cs.push_back(detail::json::parse(c.to_json()));
    j["checks"] = std::move(cs);
    detail::json ms = detail::json::array();
    for (const auto& [k, v] : moments.entries) {
        detail::json m;
        m["k"] = k;
        m["trace"] = detail::scalar_to_json(v);
        if (auto it = moments.oracle.find(k); it != moments.oracle.end()) m["oracle"] = detail::scalar_to_json(it->second);
        ms.push_back(std::move(m));
    }
    j["moments"] = std::move(ms);
    detail::json as = detail::json::array();
    for (const auto& r : audit)
        as.push_back({{"n", r.n},
                      {"tl_dimension", r.tl_dimension},
                      {"catalan", r.catalan.get_str()},
                      {"span_dimension", r.span_dimension},
                      {"base_loop_count", r.base_loop_count.get_str()}});
    j["audit"] = std::move(as);
    j["ok"] = ok();
    return j.dump(2);
}

namespace {

std::vector<RelationReport> certified_checks(const GeneratorCandidate& c, const GeneratorCandidate& exact,
                                             const RelationManifest& manifest, const VerifyOptions& options,
                                             MomentTable& table, int max_k) {
    std::vector<RelationReport> out = verify_generator(c, options);
    if (manifest.generator.normalization) {
        RelationReport r = certify_scalar_zero("manifest_normalization",
                                               inner_product(c.element, c.element) - *manifest.generator.normalization,
                                               options);
        out.push_back(std::move(r));
    }
    out.push_back(relation_4box(c, options));
    for (auto& r : relations_56(c, manifest, options, &exact)) out.push_back(std::move(r));
    table = moments(c, max_k, true);
    if (max_k >= 2)
        out.push_back(certify_scalar_zero("trace_square_is_norm",
                                          table.entries.at(2) - inner_product(c.element, c.element), options));
    for (const auto& [k, v] : table.entries)
        out.push_back(certify_scalar_zero("trace_power_" + std::to_string(k) + "_oracle", v - table.oracle.at(k), options));
    return out;
}

}  // namespace

PipelineReport verify_all(const SpinContextPtr& ctx, const RelationManifest& manifest, const PipelineOptions& options) {
    PipelineReport report;
    const GeneratorCandidate exact = find_generator(ctx, generator_spec(manifest));
    if (!options.interval_only) {
        report.candidate = exact;
        report.checks = certified_checks(exact, exact, manifest, options.verify, report.moments, options.max_k);
    } else {
        VerifyOptions verify = options.verify;
        for (unsigned bits = verify.precision_bits;; bits *= 2) {
            verify.precision_bits = std::min(bits, options.verify.max_precision_bits);
            GeneratorCandidate c = exact;
            c.element = to_interval(exact.element, verify.precision_bits);
            c.normalization = inner_product(c.element, c.element);
            report.candidate = c;
            report.precision_bits = verify.precision_bits;
            report.checks = certified_checks(c, exact, manifest, verify, report.moments, options.max_k);
            if (report.ok() || verify.precision_bits >= options.verify.max_precision_bits) break;
        }
    }
    report.audit = dimension_audit(exact, options.max_n);
    for (const auto& row : report.audit) {
        RelationReport r;
        r.id = "audit_tl_catalan_" + std::to_string(row.n);
        r.certification = Integer(row.tl_dimension) == row.catalan ? Certification::exact_zero : Certification::failed;
        r.residual_norm = Scalar(0);
        report.checks.push_back(std::move(r));
    }
    return report;
}

}  // namespace planalg
