#include "orbifold/monodromy.hpp"

#include "orbifold/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_set>

namespace orbifold {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw InvariantError("image list is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int degree)
{
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, int degree)
{
    if (degree < 1)
        throw SchemaError("permutation degree must be positive");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(degree), 0);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw SchemaError("expected '(' in cycle notation '" + std::string(text) + "'");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos >= text.size())
                throw SchemaError("unterminated cycle in '" + std::string(text) + "'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw SchemaError("unexpected character in cycle notation '" +
                                  std::string(text) + "'");
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > degree)
                    break;
                ++pos;
            }
            if (value < 1 || value > degree)
                throw InvariantError("point " + std::to_string(value) + " outside 1.." +
                                     std::to_string(degree));
            cycle.push_back(value - 1);
        }
        for (int v : cycle) {
            if (used[static_cast<std::size_t>(v)])
                throw InvariantError("point " + std::to_string(v + 1) +
                                     " repeated in cycle notation '" + std::string(text) + "'");
            used[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
    if (degree() != rhs.degree())
        throw InvariantError("composing permutations of different degrees");
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const
{
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

bool Permutation::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i))
            return false;
    return true;
}

std::vector<int> Permutation::cycle_type() const
{
    std::vector<int> lengths;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

std::string Permutation::to_cycles() const
{
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == static_cast<int>(i))
            continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
            seen[j] = 1;
            if (j != i)
                out += ' ';
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.images()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ULL;
    }
    return h;
}

MonodromyDatum MonodromyDatum::create(int base_genus, int degree, int characteristic,
                                      std::vector<std::pair<Permutation, Permutation>> handles,
                                      std::vector<BranchCycle> branch_cycles)
{
    if (base_genus < 0)
        throw InvariantError("base genus must be non-negative");
    if (degree < 1)
        throw InvariantError("degree must be positive");
    if (characteristic != 0 && !is_prime(characteristic))
        throw InvariantError("characteristic must be 0 or prime");
    if (static_cast<int>(handles.size()) != base_genus)
        throw InvariantError("expected " + std::to_string(base_genus) + " handle pairs, got " +
                             std::to_string(handles.size()));

    Permutation product = Permutation::identity(degree);
    for (const auto& [alpha, beta] : handles) {
        if (alpha.degree() != degree || beta.degree() != degree)
            throw InvariantError("handle permutation has the wrong degree");
        product = product * alpha * beta * alpha.inverse() * beta.inverse();
    }
    std::unordered_set<std::string> labels;
    for (const auto& bc : branch_cycles) {
        if (bc.sigma.degree() != degree)
            throw InvariantError("branch cycle at '" + bc.point + "' has the wrong degree");
        if (bc.sigma.is_identity())
            throw InvariantError("branch cycle at '" + bc.point + "' is the identity");
        if (!labels.insert(bc.point).second)
            throw InvariantError("branch point '" + bc.point + "' listed twice");
        for (int len : bc.sigma.cycle_type())
            if (!is_tame(len, characteristic))
                throw InvariantError("wild cycle length " + std::to_string(len) + " at '" +
                                     bc.point + "'");
        product = product * bc.sigma;
    }
    if (!product.is_identity())
        throw InvariantError("product relation fails: product is " + product.to_cycles());

    MonodromyDatum M;
    M.base_genus_ = base_genus;
    M.degree_ = degree;
    M.characteristic_ = characteristic;
    M.handles_ = std::move(handles);
    M.branch_cycles_ = std::move(branch_cycles);
    return M;
}

std::vector<Permutation> MonodromyDatum::generators() const
{
    std::vector<Permutation> gens;
    for (const auto& [alpha, beta] : handles_) {
        gens.push_back(alpha);
        gens.push_back(beta);
    }
    for (const auto& bc : branch_cycles_)
        gens.push_back(bc.sigma);
    return gens;
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree)
{
    std::vector<int> parent(static_cast<std::size_t>(degree));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        return v;
    };
    for (const auto& g : gens)
        for (int i = 0; i < degree; ++i) {
            const int a = find(i);
            const int b = find(g(i));
            if (a != b)
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<std::vector<int>> out;
    std::vector<int> slot(static_cast<std::size_t>(degree), -1);
    for (int i = 0; i < degree; ++i) {
        const int root = find(i);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(i);
    }
    return out;
}

namespace {

std::vector<Permutation> close_under(const std::vector<Permutation>& gens, int degree,
                                     std::uint64_t cap,
                                     std::unordered_set<Permutation, PermutationHash>& seen)
{
    const Permutation id = Permutation::identity(degree);
    seen = {id};
    std::vector<Permutation> elements{id};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = g * elements[head];
            if (seen.insert(next).second) {
                if (elements.size() >= cap)
                    throw CapExceeded("group enumeration exceeded cap of " +
                                      std::to_string(cap) + " elements");
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

} // namespace

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& gens, int degree,
                                         std::uint64_t cap)
{
    // Generators already inside the current subgroup are skipped, so the
    // number of re-closures is bounded by the length of a subgroup chain.
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> active;
    std::vector<Permutation> elements = close_under(active, degree, cap, seen);
    for (const auto& g : gens) {
        if (g.degree() != degree)
            throw InvariantError("generator has the wrong degree");
        if (seen.count(g))
            continue;
        active.push_back(g);
        elements = close_under(active, degree, cap, seen);
    }
    return elements;
}

bool is_connected(const MonodromyDatum& M)
{
    return orbits(M.generators(), M.degree()).size() == 1;
}

namespace {

void require_connected(const MonodromyDatum& M)
{
    if (!is_connected(M))
        throw InvariantError("monodromy datum is disconnected (group not transitive)");
}

} // namespace

std::uint64_t group_order(const MonodromyDatum& M, std::uint64_t cap)
{
    require_connected(M);
    return enumerate_group(M.generators(), M.degree(), cap).size();
}

bool is_galois(const MonodromyDatum& M, std::uint64_t cap)
{
    return group_order(M, cap) == static_cast<std::uint64_t>(M.degree());
}

RamificationProfile ramification_profile_of(const MonodromyDatum& M, std::uint64_t cap)
{
    require_connected(M);
    FiberMap fibers;
    for (const auto& bc : M.branch_cycles())
        fibers.emplace(bc.point, bc.sigma.cycle_type());
    const CurveTag target{"X", M.base_genus(), M.characteristic()};
    return RamificationProfile::create(target, M.degree(), std::move(fibers), is_galois(M, cap));
}

std::vector<Permutation> normal_closure_generators(const MonodromyDatum& M)
{
    const auto gens = M.generators();
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> out;
    for (const auto& bc : M.branch_cycles()) {
        if (!seen.insert(bc.sigma).second)
            continue;
        // Conjugacy class of sigma, closed under conjugation by the generators.
        std::vector<Permutation> frontier{bc.sigma};
        out.push_back(bc.sigma);
        while (!frontier.empty()) {
            Permutation x = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& g : gens) {
                Permutation y = g * x * g.inverse();
                if (seen.insert(y).second) {
                    out.push_back(y);
                    frontier.push_back(std::move(y));
                }
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> normal_closure_orbits(const MonodromyDatum& M)
{
    return orbits(normal_closure_generators(M), M.degree());
}

bool is_genuinely_ramified(const MonodromyDatum& M)
{
    require_connected(M);
    return normal_closure_orbits(M).size() == 1;
}

EtaleSubcover max_etale_subcover(const MonodromyDatum& M)
{
    require_connected(M);
    EtaleSubcover out;
    out.blocks = normal_closure_orbits(M);
    const int nblocks = static_cast<int>(out.blocks.size());
    std::vector<int> block_of(static_cast<std::size_t>(M.degree()));
    for (int b = 0; b < nblocks; ++b)
        for (int v : out.blocks[static_cast<std::size_t>(b)])
            block_of[static_cast<std::size_t>(v)] = b;

    const auto induced = [&](const Permutation& g) {
        std::vector<int> images(static_cast<std::size_t>(nblocks));
        for (int b = 0; b < nblocks; ++b)
            images[static_cast<std::size_t>(b)] =
                block_of[static_cast<std::size_t>(g(out.blocks[static_cast<std::size_t>(b)][0]))];
        return Permutation(std::move(images));
    };

    for (const auto& bc : M.branch_cycles())
        if (!induced(bc.sigma).is_identity())
            throw InvariantError("branch cycle at '" + bc.point +
                                 "' moves N-orbits; block system is inconsistent");

    std::vector<std::pair<Permutation, Permutation>> handles;
    for (const auto& [alpha, beta] : M.handles())
        handles.emplace_back(induced(alpha), induced(beta));
    out.degree = nblocks;
    out.residual_degree = M.degree() / nblocks;
    out.block_datum = MonodromyDatum::create(M.base_genus(), nblocks, M.characteristic(),
                                             std::move(handles), {});
    return out;
}

bool oracle_is_genuinely_ramified(const MonodromyDatum& M, int max_degree, std::uint64_t cap)
{
    require_connected(M);
    if (M.degree() > max_degree)
        throw CapExceeded("oracle limited to degree " + std::to_string(max_degree));
    const int d = M.degree();
    const auto gens = M.generators();
    const auto group = enumerate_group(gens, d, cap);

    // Schreier generators of Stab(0) from a BFS transversal of the orbit of 0.
    std::vector<std::optional<Permutation>> transversal(static_cast<std::size_t>(d));
    transversal[0] = Permutation::identity(d);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        const int i = queue.front();
        queue.pop_front();
        for (const auto& s : gens) {
            const int j = s(i);
            if (!transversal[static_cast<std::size_t>(j)]) {
                transversal[static_cast<std::size_t>(j)] = s * *transversal[static_cast<std::size_t>(i)];
                queue.push_back(j);
            }
        }
    }
    std::vector<Permutation> subgroup_gens;
    for (int i = 0; i < d; ++i)
        for (const auto& s : gens) {
            const auto& ui = *transversal[static_cast<std::size_t>(i)];
            const auto& usi = *transversal[static_cast<std::size_t>(s(i))];
            Permutation h = usi.inverse() * s * ui;
            if (!h.is_identity())
                subgroup_gens.push_back(std::move(h));
        }
    // N: every conjugate g sigma g^-1 over all group elements g.
    for (const auto& g : group) {
        const Permutation ginv = g.inverse();
        for (const auto& bc : M.branch_cycles())
            subgroup_gens.push_back(g * bc.sigma * ginv);
    }
    std::sort(subgroup_gens.begin(), subgroup_gens.end(),
              [](const Permutation& a, const Permutation& b) { return a.images() < b.images(); });
    subgroup_gens.erase(std::unique(subgroup_gens.begin(), subgroup_gens.end()),
                        subgroup_gens.end());
    return enumerate_group(subgroup_gens, d, cap).size() == group.size();
}

} // namespace orbifold
