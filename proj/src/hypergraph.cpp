#include "tilelab/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace tilelab {

namespace {

void check_edge(int k, int n, const Edge& e) {
    if (static_cast<int>(e.size()) != k)
        fail(ErrorCode::domain, "edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(k));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n)
            fail(ErrorCode::domain,
                 "vertex " + std::to_string(e[i]) + " out of range [0, " +
                     std::to_string(n) + ")");
        if (i > 0 && e[i] <= e[i - 1])
            fail(ErrorCode::domain, "edge vertices must be distinct");
    }
}

}  // namespace

Hypergraph::Hypergraph(int k, int n) : k_(k), n_(n) {
    if (k < 2) fail(ErrorCode::domain, "uniformity k must be at least 2");
    if (n < 0) fail(ErrorCode::domain, "vertex count must be nonnegative");
}

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : Hypergraph(k, n) {
    for (auto& e : edges) add_edge(std::move(e));
}

void Hypergraph::add_edge(Edge e) {
    std::sort(e.begin(), e.end());
    check_edge(k_, n_, e);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, std::move(e));
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

long long Hypergraph::vertex_degree(Vertex v) const {
    long long d = 0;
    for (const auto& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

PartiteProfile::PartiteProfile(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.size() < 2)
        fail(ErrorCode::invalid_profile, "profile needs at least 2 parts");
    for (size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] <= 0)
            fail(ErrorCode::invalid_profile, "profile entries must be positive");
        if (i > 0 && sizes[i] < sizes[i - 1])
            fail(ErrorCode::invalid_profile, "profile must be sorted nondecreasing");
    }
}

int PartiteProfile::m() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

std::vector<std::vector<Vertex>> profile_parts(const PartiteProfile& profile) {
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (int size : profile.sizes) {
        std::vector<Vertex> part(size);
        std::iota(part.begin(), part.end(), next);
        next += size;
        parts.push_back(std::move(part));
    }
    return parts;
}

Hypergraph complete_partite(const PartiteProfile& profile) {
    auto parts = profile_parts(profile);
    int k = profile.k();
    Hypergraph h(k, profile.m());
    Edge edge(k);
    std::vector<int> pick(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) edge[i] = parts[i][pick[i]];
        h.add_edge(edge);
        int i = k - 1;
        while (i >= 0 && ++pick[i] == static_cast<int>(parts[i].size()))
            pick[i--] = 0;
        if (i < 0) break;
    }
    return h;
}

Hypergraph loose_cycle(int k, int s) {
    if (k < 3 || s < 2)
        fail(ErrorCode::domain, "loose cycle needs k >= 3 and s >= 2");
    int n = s * (k - 1);
    Hypergraph h(k, n);
    for (int j = 0; j < s; ++j) {
        Edge e(k);
        for (int i = 0; i < k; ++i) e[i] = (j * (k - 1) + i) % n;
        h.add_edge(std::move(e));
    }
    return h;
}

Hypergraph loose_path(int k, int s) {
    if (k < 3 || s < 1)
        fail(ErrorCode::domain, "loose path needs k >= 3 and s >= 1");
    Hypergraph h(k, s * (k - 1) + 1);
    for (int j = 0; j < s; ++j) {
        Edge e(k);
        for (int i = 0; i < k; ++i) e[i] = j * (k - 1) + i;
        h.add_edge(std::move(e));
    }
    return h;
}

Hypergraph khat_extension(const PartiteProfile& profile) {
    int k = profile.k();
    for (int i = 2; i < k; ++i)
        if (profile.sizes[i] != profile.sizes[1])
            fail(ErrorCode::shape, "profile must have shape (a, b,...,b)");
    if (profile.sizes[0] >= profile.sizes[1])
        fail(ErrorCode::shape, "profile must have a < b");

    Hypergraph base = complete_partite(profile);
    int m = profile.m();
    Hypergraph h(k, m + k - 1, base.edges());
    Edge extra;
    extra.push_back(profile.sizes[0]);  // first vertex of the second part
    for (int i = 0; i < k - 1; ++i) extra.push_back(m + i);
    h.add_edge(std::move(extra));
    return h;
}

long long degree_of_set(const Hypergraph& h, std::span<const Vertex> set) {
    if (static_cast<int>(set.size()) > h.k())
        fail(ErrorCode::domain, "query set larger than the uniformity");
    Edge s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= h.n())
            fail(ErrorCode::domain, "query vertex out of range");
        if (i > 0 && s[i] == s[i - 1])
            fail(ErrorCode::domain, "query set has repeated vertices");
    }
    long long d = 0;
    for (const auto& e : h.edges())
        if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++d;
    return d;
}

long long min_d_degree(const Hypergraph& h, int d, long long budget) {
    if (d < 1 || d >= h.k())
        fail(ErrorCode::domain, "d must satisfy 1 <= d <= k-1");
    if (h.n() < d) fail(ErrorCode::domain, "fewer than d vertices");
    Budget nodes(budget);

    // Tally degrees of the d-sets that occur inside edges, then sweep all
    // d-subsets of the vertex set; an absent d-set has degree 0.
    struct VecHash {
        size_t operator()(const std::vector<Vertex>& v) const {
            size_t h = 0x9e3779b97f4a7c15ULL;
            for (int x : v) h = h * 1099511628211ULL + static_cast<size_t>(x) + 1;
            return h;
        }
    };
    std::unordered_map<std::vector<Vertex>, long long, VecHash> count;
    std::vector<Vertex> sub(d);
    for (const auto& e : h.edges()) {
        std::vector<int> idx(d);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            nodes.spend();
            for (int i = 0; i < d; ++i) sub[i] = e[idx[i]];
            ++count[sub];
            int i = d - 1;
            while (i >= 0 && idx[i] == h.k() - d + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    long long best = -1;
    std::vector<Vertex> set(d);
    std::iota(set.begin(), set.end(), 0);
    while (true) {
        nodes.spend();
        auto it = count.find(set);
        long long deg = it == count.end() ? 0 : it->second;
        if (best < 0 || deg < best) best = deg;
        if (best == 0) return 0;
        int i = d - 1;
        while (i >= 0 && set[i] == h.n() - d + i) --i;
        if (i < 0) break;
        ++set[i];
        for (int j = i + 1; j < d; ++j) set[j] = set[j - 1] + 1;
    }
    return best;
}

namespace {

bool iso_extend(const Hypergraph& a, const Hypergraph& b,
                std::vector<Vertex>& map, std::vector<bool>& used,
                const std::vector<long long>& deg_a,
                const std::vector<long long>& deg_b, Budget& nodes) {
    int v = static_cast<int>(std::find(map.begin(), map.end(), -1) - map.begin());
    if (v == a.n()) {
        for (const auto& e : a.edges()) {
            Edge img(e.size());
            for (size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            if (!b.has_edge(img)) return false;
        }
        return true;
    }
    for (Vertex w = 0; w < b.n(); ++w) {
        if (used[w] || deg_a[v] != deg_b[w]) continue;
        nodes.spend();
        map[v] = w;
        used[w] = true;
        // Check edges completed by this assignment; equal edge counts make
        // an injective edge mapping automatically surjective.
        bool ok = true;
        for (const auto& e : a.edges()) {
            bool complete = true;
            for (Vertex u : e)
                if (map[u] < 0) { complete = false; break; }
            if (!complete || std::find(e.begin(), e.end(), v) == e.end()) continue;
            Edge img(e.size());
            for (size_t i = 0; i < e.size(); ++i) img[i] = map[e[i]];
            std::sort(img.begin(), img.end());
            if (!b.has_edge(img)) { ok = false; break; }
        }
        if (ok && iso_extend(a, b, map, used, deg_a, deg_b, nodes)) return true;
        map[v] = -1;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b, long long budget) {
    if (a.k() != b.k() || a.n() != b.n() || a.edge_count() != b.edge_count())
        return false;
    std::vector<long long> deg_a(a.n()), deg_b(b.n());
    for (Vertex v = 0; v < a.n(); ++v) deg_a[v] = a.vertex_degree(v);
    for (Vertex v = 0; v < b.n(); ++v) deg_b[v] = b.vertex_degree(v);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    Budget nodes(budget);
    std::vector<Vertex> map(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    return iso_extend(a, b, map, used, deg_a, deg_b, nodes);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    if (text.empty()) fail(ErrorCode::parse, "empty input");
    if (text.back() != '\n')
        fail(ErrorCode::parse, "missing trailing newline");

    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    int k = -1, n = -1;
    std::vector<std::pair<int, Edge>> pending;
    while (std::getline(stream, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) parse_fail(lineno, "non-numeric token");
        if (k < 0) {
            if (nums.size() != 2) parse_fail(lineno, "expected header 'k n'");
            if (nums[0] < 2) parse_fail(lineno, "uniformity must be >= 2");
            if (nums[1] < 0) parse_fail(lineno, "negative vertex count");
            k = static_cast<int>(nums[0]);
            n = static_cast<int>(nums[1]);
            continue;
        }
        if (static_cast<int>(nums.size()) != k)
            parse_fail(lineno, "expected " + std::to_string(k) + " vertices");
        Edge e;
        for (size_t i = 0; i < nums.size(); ++i) {
            if (nums[i] < 0 || nums[i] >= n)
                parse_fail(lineno, "vertex " + std::to_string(nums[i]) +
                                       " out of range [0, " + std::to_string(n) + ")");
            if (i > 0 && nums[i] <= nums[i - 1])
                parse_fail(lineno, "edge vertices must be strictly ascending");
            e.push_back(static_cast<int>(nums[i]));
        }
        pending.emplace_back(lineno, std::move(e));
    }
    if (k < 0) fail(ErrorCode::parse, "missing 'k n' header line");

    Hypergraph h(k, n);
    for (auto& [ln, e] : pending) {
        if (h.has_edge(e)) parse_fail(ln, "duplicate edge");
        h.add_edge(std::move(e));
    }
    return h;
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::parse, "cannot open " + path);
    return read_hg(in);
}

void write_hg(std::ostream& out, const Hypergraph& h,
              const std::vector<std::string>& comments) {
    for (const auto& c : comments) {
        if (!c.empty() && c[0] == '#')
            out << c << "\n";
        else
            out << "# " << c << "\n";
    }
    out << h.k() << " " << h.n() << "\n";
    for (const auto& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << " ";
            out << e[i];
        }
        out << "\n";
    }
}

void write_hg_file(const std::string& path, const Hypergraph& h,
                   const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::parse, "cannot open " + path + " for writing");
    write_hg(out, h, comments);
}

std::string read_hg_certificate(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::parse, "cannot open " + path);
    std::string line;
    const std::string tag = "#certificate ";
    while (std::getline(in, line))
        if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
    return "";
}

}  // namespace tilelab
