#include "edgereg/complex.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "edgereg/errors.hpp"

namespace edgereg {

SimplicialComplex SimplicialComplex::void_complex(int ground) {
    SimplicialComplex k;
    k.ground = ground;
    return k;
}

SimplicialComplex SimplicialComplex::irrelevant(int ground) {
    SimplicialComplex k;
    k.ground = ground;
    k.faces = {0};
    return k;
}

namespace {

void check_ground(int ground) {
    if (ground < 0 || ground > 64)
        throw std::invalid_argument("complex: ground set must have 0..64 vertices");
}

std::uint64_t ground_mask(int ground) {
    return ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int ground, std::vector<std::uint64_t> faces) {
    check_ground(ground);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::unordered_set<std::uint64_t> present(faces.begin(), faces.end());
    for (std::uint64_t f : faces) {
        if (f & ~ground_mask(ground))
            throw std::invalid_argument("complex: face outside ground set");
        for (std::uint64_t rest = f; rest;) {
            std::uint64_t low = rest & (~rest + 1);
            if (!present.count(f ^ low))
                throw std::invalid_argument("complex: face family is not downward closed");
            rest ^= low;
        }
    }
    SimplicialComplex k;
    k.ground = ground;
    k.faces = std::move(faces);
    return k;
}

SimplicialComplex SimplicialComplex::closure_of(int ground, const std::vector<std::uint64_t>& generators,
                                                std::size_t max_faces) {
    check_ground(ground);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue;
    seen.insert(0);
    queue.push_back(0);
    for (std::uint64_t g : generators) {
        if (g & ~ground_mask(ground))
            throw std::invalid_argument("complex: face outside ground set");
        if (seen.insert(g).second) queue.push_back(g);
    }
    while (!queue.empty()) {
        std::uint64_t f = queue.back();
        queue.pop_back();
        for (std::uint64_t rest = f; rest;) {
            std::uint64_t low = rest & (~rest + 1);
            std::uint64_t sub = f ^ low;
            if (seen.insert(sub).second) queue.push_back(sub);
            rest ^= low;
        }
        if (seen.size() > max_faces)
            throw ResourceLimitError("complex: face count exceeds cap");
    }
    SimplicialComplex k;
    k.ground = ground;
    k.faces.assign(seen.begin(), seen.end());
    std::sort(k.faces.begin(), k.faces.end());
    return k;
}

int SimplicialComplex::dim() const {
    if (faces.empty()) return -2;
    int top = 0;
    for (std::uint64_t f : faces) top = std::max(top, std::popcount(f));
    return top - 1;
}

std::vector<int> SimplicialComplex::f_vector() const {
    std::vector<int> f(static_cast<std::size_t>(dim() + 2 > 0 ? dim() + 2 : 0), 0);
    for (std::uint64_t face : faces) ++f[static_cast<std::size_t>(std::popcount(face))];
    return f;
}

std::vector<std::uint64_t> SimplicialComplex::facets() const {
    std::unordered_set<std::uint64_t> present(faces.begin(), faces.end());
    std::vector<std::uint64_t> out;
    for (std::uint64_t f : faces) {
        bool maximal = true;
        for (int v = 0; v < ground && maximal; ++v) {
            std::uint64_t vbit = std::uint64_t{1} << v;
            if (!(f & vbit) && present.count(f | vbit)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

namespace {

std::atomic<long long> g_homology_calls{0};
std::atomic<long long> g_euler_checks{0};

void euler_check(const std::vector<int>& f, const std::vector<int>& h) {
    long long chi_f = 0, chi_h = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi_f += (k % 2 ? -1 : 1) * f[k];
    for (std::size_t k = 0; k < h.size(); ++k) chi_h += (k % 2 ? -1 : 1) * h[k];
    ++g_euler_checks;
    if (chi_f != chi_h) throw std::logic_error("homology: Euler identity violated");
}

}  // namespace

long long homology_call_count() { return g_homology_calls.load(); }
long long euler_check_count() { return g_euler_checks.load(); }

std::vector<int> reduced_homology(const SimplicialComplex& k, const FieldSpec& field,
                                  bool allow_shortcuts) {
    ++g_homology_calls;
    if (k.is_void()) return {};
    if (k.faces[0] != 0) throw std::invalid_argument("homology: faces not downward closed");

    auto f = k.f_vector();
    int levels = static_cast<int>(f.size());  // faces grouped by vertex count 0..levels-1
    std::vector<int> h(static_cast<std::size_t>(levels), 0);

    if (allow_shortcuts) {
        // A cone is contractible: all reduced homology vanishes.
        auto facets = k.facets();
        std::uint64_t common = ~std::uint64_t{0};
        for (std::uint64_t f_mask : facets) common &= f_mask;
        if (common != 0) {
            euler_check(f, h);
            return h;
        }
    }

    std::vector<std::vector<std::uint64_t>> level_faces(static_cast<std::size_t>(levels));
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(k.faces.size());
    for (std::uint64_t face : k.faces)
        level_faces[static_cast<std::size_t>(std::popcount(face))].push_back(face);
    for (auto& level : level_faces) {
        std::sort(level.begin(), level.end());
        for (std::size_t j = 0; j < level.size(); ++j) index[level[j]] = static_cast<int>(j);
    }

    // ranks[l] = rank of the boundary map from level l to level l-1
    std::vector<int> ranks(static_cast<std::size_t>(levels) + 1, 0);
    for (int l = 1; l < levels; ++l) {
        const auto& source = level_faces[static_cast<std::size_t>(l)];
        const auto& target = level_faces[static_cast<std::size_t>(l - 1)];
        SparseIntMatrix boundary(static_cast<int>(target.size()), static_cast<int>(source.size()));
        for (std::size_t j = 0; j < source.size(); ++j) {
            std::uint64_t face = source[j];
            int sign = 1;
            for (std::uint64_t rest = face; rest;) {
                std::uint64_t low = rest & (~rest + 1);
                boundary.add(index.at(face ^ low), static_cast<int>(j), sign);
                sign = -sign;
                rest ^= low;
            }
        }
        ranks[static_cast<std::size_t>(l)] = exact_rank(boundary, field);
    }

    for (int l = 0; l < levels; ++l) {
        int dim_h = f[static_cast<std::size_t>(l)] - ranks[static_cast<std::size_t>(l)] -
                    ranks[static_cast<std::size_t>(l) + 1];
        if (dim_h < 0) throw std::logic_error("homology: negative rank");
        h[static_cast<std::size_t>(l)] = dim_h;
    }
    euler_check(f, h);
    return h;
}

}  // namespace edgereg
