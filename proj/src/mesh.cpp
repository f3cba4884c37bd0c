#include "sdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include <json.hpp>

#include "sdg/errors.hpp"

namespace sdg {

namespace {

StaggeredMesh build_from_primal(const std::vector<Vec2>& vertices,
                                const std::vector<CellSpec>& specs,
                                std::optional<Rect> domain) {
    const int n_pv = static_cast<int>(vertices.size());
    for (const Vec2& v : vertices)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw config_error("mesh: non-finite vertex coordinate");

    StaggeredMesh mesh;
    mesh.vertices = vertices;
    mesh.n_primal_vertices = n_pv;
    mesh.domain = domain;

    // Cells, centers and fan simplexes.
    for (std::size_t c = 0; c < specs.size(); ++c) {
        const CellSpec& spec = specs[c];
        const std::size_t k = spec.vertex_ids.size();
        if (k < 3) throw config_error("mesh: cell with fewer than 3 vertices");
        std::set<int> uniq;
        std::vector<Vec2> poly;
        poly.reserve(k);
        for (int vid : spec.vertex_ids) {
            if (vid < 0 || vid >= n_pv)
                throw config_error("mesh: cell vertex index out of range");
            if (!uniq.insert(vid).second)
                throw config_error("mesh: repeated vertex in cell");
            poly.push_back(vertices[vid]);
        }

        PrimalCell cell;
        cell.id = static_cast<int>(c);
        cell.vertex_ids = spec.vertex_ids;
        Vec2 center;
        if (spec.center) {
            center = *spec.center;
            cell.center_override = true;
        } else {
            center = polygon_centroid(poly);
        }
        if (!std::isfinite(center.x) || !std::isfinite(center.y))
            throw config_error("mesh: non-finite cell center");

        // Star-shapedness w.r.t. the fan point: every fan simplex must be
        // positively oriented (covers CW input and centers outside the kernel).
        for (std::size_t i = 0; i < k; ++i) {
            const Vec2 a = poly[i];
            const Vec2 b = poly[(i + 1) % k];
            if (signed_area2(center, a, b) <= 0.0)
                throw numeric_error("mesh: cell not star-shaped w.r.t. its fan point");
        }

        cell.center_vertex = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(center);

        for (std::size_t i = 0; i < k; ++i) {
            Triangle tri;
            tri.id = static_cast<int>(mesh.triangles.size());
            tri.cell_id = cell.id;
            tri.vertex_ids = {cell.center_vertex, spec.vertex_ids[i],
                              spec.vertex_ids[(i + 1) % k]};
            cell.triangle_ids.push_back(tri.id);
            mesh.triangles.push_back(tri);
        }
        mesh.cells.push_back(std::move(cell));
    }

    // Edges, keyed by sorted endpoint pair; ids in first-encounter order
    // (triangles visited in id order, primal edge first, then the two spokes).
    std::map<std::array<int, 2>, int> edge_of;
    auto get_edge = [&](int va, int vb) -> int {
        std::array<int, 2> key{std::min(va, vb), std::max(va, vb)};
        auto it = edge_of.find(key);
        if (it != edge_of.end()) return it->second;
        Edge e;
        e.id = static_cast<int>(mesh.edges.size());
        e.vertex_ids = key;
        e.triangle_ids = {-1, -1};
        e.kind = (key[1] >= mesh.n_primal_vertices) ? EdgeKind::Dual : EdgeKind::Primal;
        e.length = norm(mesh.vertices[key[1]] - mesh.vertices[key[0]]);
        edge_of.emplace(key, e.id);
        mesh.edges.push_back(e);
        return e.id;
    };
    auto attach = [&](int eid, int tid) {
        Edge& e = mesh.edges[eid];
        if (e.triangle_ids[0] < 0) {
            e.triangle_ids[0] = tid;
        } else if (e.triangle_ids[1] < 0) {
            e.triangle_ids[1] = tid;
        } else {
            throw config_error("mesh: edge shared by more than two simplexes");
        }
    };
    for (Triangle& tri : mesh.triangles) {
        const int vc = tri.vertex_ids[0], va = tri.vertex_ids[1], vb = tri.vertex_ids[2];
        tri.primal_edge = get_edge(va, vb);
        tri.dual_edges = {get_edge(vc, va), get_edge(vc, vb)};
        attach(tri.primal_edge, tri.id);
        attach(tri.dual_edges[0], tri.id);
        attach(tri.dual_edges[1], tri.id);
    }

    // Orientation, adjacency checks, normals, kind indices.
    for (Edge& e : mesh.edges) {
        if (e.triangle_ids[0] > e.triangle_ids[1] && e.triangle_ids[1] >= 0)
            std::swap(e.triangle_ids[0], e.triangle_ids[1]);
        e.boundary = (e.triangle_ids[1] < 0);
        if (e.kind == EdgeKind::Dual) {
            if (e.boundary)
                throw config_error("mesh: dual edge with a single simplex");
            if (mesh.triangles[e.triangle_ids[0]].cell_id !=
                mesh.triangles[e.triangle_ids[1]].cell_id)
                throw config_error("mesh: dual edge spanning two cells");
        } else if (!e.boundary) {
            if (mesh.triangles[e.triangle_ids[0]].cell_id ==
                mesh.triangles[e.triangle_ids[1]].cell_id)
                throw config_error("mesh: interior primal edge inside one cell");
        }

        // Unit normal: from triangle_ids[0] toward triangle_ids[1]
        // (outward from the only simplex on the boundary).
        const Vec2 p0 = mesh.vertices[e.vertex_ids[0]];
        const Vec2 p1 = mesh.vertices[e.vertex_ids[1]];
        const Vec2 t = (1.0 / e.length) * (p1 - p0);
        Vec2 n{t.y, -t.x};
        const Triangle& t0 = mesh.triangles[e.triangle_ids[0]];
        const Vec2 c0 = (1.0 / 3.0) * (mesh.vertices[t0.vertex_ids[0]] +
                                       mesh.vertices[t0.vertex_ids[1]] +
                                       mesh.vertices[t0.vertex_ids[2]]);
        const Vec2 mid = 0.5 * (p0 + p1);
        if (dot(n, c0 - mid) > 0.0) n = {-n.x, -n.y};
        e.normal = n;

        if (e.kind == EdgeKind::Primal) {
            e.space_index = static_cast<int>(mesh.primal_edge_ids.size());
            mesh.primal_edge_ids.push_back(e.id);
        } else {
            e.space_index = static_cast<int>(mesh.dual_edge_ids.size());
            mesh.dual_edge_ids.push_back(e.id);
        }
    }

    double h = 0.0;
    for (const Triangle& tri : mesh.triangles)
        h = std::max(h, tri_diameter(mesh.vertices[tri.vertex_ids[0]],
                                     mesh.vertices[tri.vertex_ids[1]],
                                     mesh.vertices[tri.vertex_ids[2]]));
    mesh.h = h;
    return mesh;
}

}  // namespace

StaggeredMesh build_square_mesh(int n, const Rect& domain) {
    if (n < 1) throw config_error("build_square_mesh: n must be >= 1");
    if (!(domain.width() > 0.0) || !(domain.height() > 0.0))
        throw config_error("build_square_mesh: empty domain");
    if (std::abs(domain.width() - domain.height()) >
        1e-12 * std::max(domain.width(), domain.height()))
        throw config_error("build_square_mesh: domain must be square");

    const double hx = domain.width() / n;
    const double hy = domain.height() / n;
    std::vector<Vec2> vertices;
    vertices.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int iy = 0; iy <= n; ++iy)
        for (int ix = 0; ix <= n; ++ix)
            vertices.push_back({domain.x0 + ix * hx, domain.y0 + iy * hy});

    std::vector<CellSpec> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    auto vid = [n](int ix, int iy) { return iy * (n + 1) + ix; };
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            CellSpec spec;
            spec.vertex_ids = {vid(ix, iy), vid(ix + 1, iy), vid(ix + 1, iy + 1),
                               vid(ix, iy + 1)};
            cells.push_back(std::move(spec));
        }
    }
    return build_from_primal(vertices, cells, domain);
}

StaggeredMesh build_polygonal_mesh(const std::vector<Vec2>& vertices,
                                   const std::vector<CellSpec>& cells) {
    if (cells.empty()) throw config_error("build_polygonal_mesh: no cells");
    return build_from_primal(vertices, cells, std::nullopt);
}

StaggeredMesh perturb_mesh(const StaggeredMesh& mesh, double delta,
                           std::uint64_t seed, double rho) {
    if (delta < 0.0 || delta >= 0.5)
        throw config_error("perturb_mesh: delta out of range [0, 0.5)");

    // Boundary primal vertices stay pinned.
    std::vector<bool> is_boundary(mesh.n_primal_vertices, false);
    for (const Edge& e : mesh.edges)
        if (e.boundary)
            for (int vid : e.vertex_ids)
                if (vid < mesh.n_primal_vertices) is_boundary[vid] = true;

    std::vector<Vec2> base(mesh.vertices.begin(),
                           mesh.vertices.begin() + mesh.n_primal_vertices);
    std::vector<CellSpec> specs;
    specs.reserve(mesh.cells.size());
    for (const PrimalCell& cell : mesh.cells) {
        CellSpec spec;
        spec.vertex_ids = cell.vertex_ids;  // centers recomputed as centroids
        specs.push_back(std::move(spec));
    }

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // 53-bit mantissa draw in [0,1); portable across standard libraries.
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    double d = delta;
    for (int reduction = 0; reduction < 4; ++reduction) {
        for (int attempt = 0; attempt < 5; ++attempt) {
            std::vector<Vec2> moved = base;
            for (int v = 0; v < mesh.n_primal_vertices; ++v) {
                const double ox = (2.0 * uniform() - 1.0) * d * mesh.h;
                const double oy = (2.0 * uniform() - 1.0) * d * mesh.h;
                if (is_boundary[v]) continue;
                moved[v] = {base[v].x + ox, base[v].y + oy};
            }
            try {
                StaggeredMesh out = build_from_primal(moved, specs, mesh.domain);
                if (validate_regularity(out, rho).pass) return out;
            } catch (const numeric_error&) {
                // fan degenerated; draw again
            }
        }
        d *= 0.5;
    }
    throw numeric_error("perturb_mesh: regularity not met after bounded retries");
}

RegularityReport validate_regularity(const StaggeredMesh& mesh, double rho) {
    RegularityReport rep;
    rep.rho_edge = std::numeric_limits<double>::infinity();
    rep.rho_star = std::numeric_limits<double>::infinity();
    for (const PrimalCell& cell : mesh.cells) {
        std::vector<Vec2> poly;
        poly.reserve(cell.vertex_ids.size());
        for (int vid : cell.vertex_ids) poly.push_back(mesh.vertices[vid]);
        const double diam = polygon_diameter(poly);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const double len = norm(poly[(i + 1) % poly.size()] - poly[i]);
            rep.rho_edge = std::min(rep.rho_edge, len / diam);
        }
    }
    for (const Triangle& tri : mesh.triangles) {
        const Vec2 a = mesh.vertices[tri.vertex_ids[0]];
        const Vec2 b = mesh.vertices[tri.vertex_ids[1]];
        const Vec2 c = mesh.vertices[tri.vertex_ids[2]];
        rep.rho_star = std::min(rep.rho_star, tri_inradius(a, b, c) / tri_diameter(a, b, c));
    }
    rep.pass = rep.rho_edge >= rho && rep.rho_star >= rho;
    return rep;
}

void validate_structure(const StaggeredMesh& mesh) {
    auto fail = [](const std::string& msg) { throw numeric_error("mesh structure: " + msg); };

    std::size_t n_primal = 0, n_dual = 0;
    for (const Edge& e : mesh.edges) {
        (e.kind == EdgeKind::Primal ? n_primal : n_dual)++;
        if (e.vertex_ids[0] >= e.vertex_ids[1]) fail("edge endpoints not ordered");
        if (std::abs(norm(e.normal) - 1.0) > 1e-12) fail("non-unit edge normal");

        const Vec2 p0 = mesh.vertices[e.vertex_ids[0]];
        const Vec2 p1 = mesh.vertices[e.vertex_ids[1]];
        const Vec2 mid = 0.5 * (p0 + p1);
        if (std::abs(dot(e.normal, p1 - p0)) > 1e-12 * e.length)
            fail("normal not perpendicular to edge");

        const Triangle& t0 = mesh.triangles[e.triangle_ids[0]];
        const Vec2 c0 = (1.0 / 3.0) * (mesh.vertices[t0.vertex_ids[0]] +
                                       mesh.vertices[t0.vertex_ids[1]] +
                                       mesh.vertices[t0.vertex_ids[2]]);
        if (dot(e.normal, c0 - mid) >= 0.0) fail("normal does not leave first simplex");

        if (e.kind == EdgeKind::Dual) {
            if (e.boundary || e.triangle_ids[1] < 0) fail("boundary dual edge");
            if (mesh.triangles[e.triangle_ids[0]].cell_id !=
                mesh.triangles[e.triangle_ids[1]].cell_id)
                fail("dual edge crossing cells");
        } else if (!e.boundary) {
            if (e.triangle_ids[0] >= e.triangle_ids[1]) fail("adjacency not sorted");
            if (mesh.triangles[e.triangle_ids[0]].cell_id ==
                mesh.triangles[e.triangle_ids[1]].cell_id)
                fail("interior primal edge within a cell");
        }
        if (e.boundary && mesh.domain) {
            const Rect r = *mesh.domain;
            const double tol = 1e-9 * std::max(r.width(), r.height());
            Vec2 outward{0, 0};
            if (std::abs(mid.x - r.x0) < tol) outward = {-1, 0};
            if (std::abs(mid.x - r.x1) < tol) outward = {1, 0};
            if (std::abs(mid.y - r.y0) < tol) outward = {0, -1};
            if (std::abs(mid.y - r.y1) < tol) outward = {0, 1};
            if (norm(outward) == 0.0) fail("boundary edge not on domain boundary");
            if (dot(outward, e.normal) < 0.99) fail("boundary normal not outward");
        }
    }
    if (n_primal != mesh.primal_edge_ids.size()) fail("primal edge list size");
    if (n_dual != mesh.dual_edge_ids.size()) fail("dual edge list size");

    std::size_t fan_total = 0;
    for (const PrimalCell& cell : mesh.cells) fan_total += cell.vertex_ids.size();
    if (mesh.triangles.size() != fan_total) fail("simplex count != sum of cell valences");
    if (n_dual != fan_total) fail("dual edge count != sum of cell valences");

    for (const Triangle& tri : mesh.triangles) {
        if (mesh.edges[tri.primal_edge].kind != EdgeKind::Primal)
            fail("simplex primal edge misclassified");
        for (int de : tri.dual_edges)
            if (mesh.edges[de].kind != EdgeKind::Dual)
                fail("simplex dual edge misclassified");
        if (signed_area2(mesh.vertices[tri.vertex_ids[0]], mesh.vertices[tri.vertex_ids[1]],
                         mesh.vertices[tri.vertex_ids[2]]) <= 0.0)
            fail("simplex not positively oriented");
    }
}

StaggeredMesh read_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("read_mesh: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw io_error("read_mesh: parse failure: " + std::string(e.what()));
    }
    try {
        if (!doc.contains("vertices") || !doc.contains("cells"))
            throw io_error("read_mesh: missing vertices/cells");
        std::vector<Vec2> vertices;
        for (const auto& v : doc.at("vertices")) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw io_error("read_mesh: vertex must be [x, y]");
            vertices.push_back({v[0].get<double>(), v[1].get<double>()});
        }
        std::vector<CellSpec> cells;
        for (const auto& c : doc.at("cells")) {
            CellSpec spec;
            for (const auto& vid : c.at("vertices")) {
                if (!vid.is_number_integer())
                    throw io_error("read_mesh: cell vertex index must be integer");
                spec.vertex_ids.push_back(vid.get<int>());
            }
            if (c.contains("center")) {
                const auto& ctr = c.at("center");
                if (!ctr.is_array() || ctr.size() != 2 || !ctr[0].is_number() ||
                    !ctr[1].is_number())
                    throw io_error("read_mesh: center must be [x, y]");
                spec.center = Vec2{ctr[0].get<double>(), ctr[1].get<double>()};
            }
            cells.push_back(std::move(spec));
        }
        try {
            return build_polygonal_mesh(vertices, cells);
        } catch (const config_error& e) {
            throw io_error("read_mesh: " + std::string(e.what()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw io_error("read_mesh: malformed document: " + std::string(e.what()));
    }
}

void write_mesh(const StaggeredMesh& mesh, const std::string& path) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (int v = 0; v < mesh.n_primal_vertices; ++v)
        doc["vertices"].push_back({mesh.vertices[v].x, mesh.vertices[v].y});
    doc["cells"] = nlohmann::json::array();
    for (const PrimalCell& cell : mesh.cells) {
        nlohmann::json jc;
        jc["vertices"] = cell.vertex_ids;
        const Vec2 ctr = mesh.vertices[cell.center_vertex];
        jc["center"] = {ctr.x, ctr.y};
        doc["cells"].push_back(std::move(jc));
    }
    std::ofstream out(path);
    if (!out) throw io_error("write_mesh: cannot open " + path);
    out << doc.dump(1) << "\n";
    if (!out) throw io_error("write_mesh: write failure on " + path);
}

}  // namespace sdg
