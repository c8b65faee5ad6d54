#include <lpont/error.hpp>
#include <lpont/simplex.hpp>

#include <sstream>

namespace lpont {

Simplex::Simplex(std::initializer_list<Vertex> vs) : Simplex(std::span<const Vertex>(vs.begin(), vs.size())) {}

Simplex::Simplex(std::span<const Vertex> vs) {
    if (vs.size() > kMaxSize) {
        throw Error(ErrorKind::DimensionMismatch, "simplex too large");
    }
    n_ = static_cast<std::uint8_t>(vs.size());
    std::copy(vs.begin(), vs.end(), v_.begin());
    std::sort(v_.begin(), v_.begin() + n_);
    for (std::size_t i = 1; i < n_; ++i) {
        if (v_[i] == v_[i - 1]) {
            throw Error(ErrorKind::VertexCollision, "repeated vertex " + std::to_string(v_[i]));
        }
    }
}

bool Simplex::contains(Vertex x) const { return std::binary_search(begin(), end(), x); }

bool Simplex::contains(const Simplex& face) const {
    return std::includes(begin(), end(), face.begin(), face.end());
}

int Simplex::index_of(Vertex x) const {
    auto it = std::lower_bound(begin(), end(), x);
    return (it != end() && *it == x) ? static_cast<int>(it - begin()) : -1;
}

Simplex Simplex::without(Vertex x) const {
    Simplex r;
    for (Vertex y : *this) {
        if (y != x) r.v_[r.n_++] = y;
    }
    return r;
}

Simplex Simplex::with(Vertex x) const {
    if (contains(x)) return *this;
    if (n_ == kMaxSize) throw Error(ErrorKind::DimensionMismatch, "simplex too large");
    Simplex r = *this;
    r.v_[r.n_++] = x;
    std::sort(r.v_.begin(), r.v_.begin() + r.n_);
    return r;
}

Simplex Simplex::without_index(std::size_t i) const {
    Simplex r;
    for (std::size_t j = 0; j < n_; ++j) {
        if (j != i) r.v_[r.n_++] = v_[j];
    }
    return r;
}

std::string Simplex::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < n_; ++i) os << (i ? "," : "") << v_[i];
    os << '}';
    return os.str();
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Simplex(out);
}

Simplex simplex_intersection(const Simplex& a, const Simplex& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Simplex(out);
}

Simplex simplex_difference(const Simplex& a, const Simplex& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Simplex(out);
}

int permutation_sign(std::span<const Vertex> seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] > seq[j]) sign = -sign;
        }
    }
    return sign;
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = s.size();
    for (Vertex v : s) h = h * 1000003u ^ static_cast<std::size_t>(v) * 0x9e3779b97f4a7c15ull;
    return h;
}

}  // namespace lpont
