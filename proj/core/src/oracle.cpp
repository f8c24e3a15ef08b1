#include "planalg/oracle.hpp"

#include <functional>
#include <map>

namespace planalg::oracle {

namespace {

struct Half {
    std::vector<std::uint32_t> edges;
    std::vector<std::size_t> vertices;
};

}  // namespace

Scalar power_trace(const GpaElement& x, int k) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "power must be positive");
    const SpinContextPtr& ctx = x.context();
    const BipartiteGraph& g = ctx->graph();
    const std::size_t n = x.n();
    const LoopSpace& sp = x.space();
    const Parity want = parity_of(x.shading());

    std::map<std::pair<std::size_t, std::size_t>, std::vector<Half>> paths;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.vertices()[v].parity != want) continue;
        Half cur;
        cur.vertices.push_back(v);
        std::function<void()> walk = [&]() {
            if (cur.edges.size() == n) {
                paths[{v, cur.vertices.back()}].push_back(cur);
                return;
            }
            for (const auto& [s, w] : g.incident(cur.vertices.back())) {
                cur.edges.push_back(s);
                cur.vertices.push_back(w);
                walk();
                cur.edges.pop_back();
                cur.vertices.pop_back();
            }
        };
        walk();
    }

    auto entry = [&](std::size_t v, const Half& bottom, const Half& top) -> const Scalar& {
        LoopPath l;
        l.start = static_cast<std::uint32_t>(v);
        l.edges = bottom.edges;
        l.edges.insert(l.edges.end(), top.edges.rbegin(), top.edges.rend());
        return x[static_cast<std::size_t>(sp.find(l))];
    };
    // Square of the factor turning a plain entry into a balanced one.
    auto factor_squared = [&](const Half& bottom, const Half& top) {
        const std::size_t v0 = bottom.vertices.front();
        const std::size_t vn = bottom.vertices.back();
        if (n == 0) return ctx->mu(v0) * ctx->mu(v0);
        Scalar f = ctx->mu(v0) * ctx->mu(v0) * ctx->mu(vn) * ctx->mu(vn);
        for (std::size_t j = 1; j < n; ++j) f *= ctx->mu(bottom.vertices[j]) * ctx->mu(top.vertices[j]);
        return f;
    };

    Scalar total(0);
    for (const auto& [ends, halves] : paths) {
        const std::size_t h = halves.size();
        std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
        while (true) {
            Scalar product(1);
            Scalar conversion(1);
            for (int i = 0; i < k && !product.is_zero(); ++i) {
                const Half& a = halves[choice[static_cast<std::size_t>(i)]];
                const Half& b = halves[choice[static_cast<std::size_t>((i + 1) % k)]];
                product *= entry(ends.first, a, b);
                conversion *= factor_squared(a, b);
            }
            if (!product.is_zero()) {
                auto root = exact_sqrt(conversion);
                Scalar c = root ? *root : Scalar(to_interval(conversion, 256).sqrt());
                total += product / c * ctx->mu(ends.first) * ctx->mu(ends.second);
            }
            std::size_t pos = 0;
            while (pos < choice.size() && ++choice[pos] == h) choice[pos++] = 0;
            if (pos == choice.size()) break;
        }
    }
    return total / ctx->normalization();
}

}  // namespace planalg::oracle
