#include "sadic/io.hpp"

#include "sadic/cf.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace sadic {

using nlohmann::json;

std::string format_substitution(const Substitution& s) {
    std::ostringstream os;
    for (Letter i = 1; i <= s.alphabet_size(); ++i) os << i << ":" << s.image(i).str() << "\n";
    return os.str();
}

Substitution parse_substitution(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::map<int, Word> images;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("parse_substitution: missing ':' in " + line);
        int letter = std::stoi(line.substr(0, colon));
        images[letter] = Word::parse(line.substr(colon + 1));
    }
    if (images.empty()) throw std::invalid_argument("parse_substitution: no image lines");
    std::vector<Word> imgs;
    for (int i = 1; i <= static_cast<int>(images.size()); ++i) {
        auto it = images.find(i);
        if (it == images.end()) throw std::invalid_argument("parse_substitution: missing image of letter " + std::to_string(i));
        imgs.push_back(it->second);
    }
    return Substitution(std::move(imgs));
}

std::string format_matrix_csv(const IntMat& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) os << (j ? "," : "") << m.at(i, j);
        os << "\n";
    }
    return os.str();
}

IntMat parse_matrix_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<BigInt>> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<BigInt> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.emplace_back(cell);
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    IntMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("parse_matrix_csv: ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

std::string format_vector_csv(const RealVec& v) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "\n";
    return os.str();
}

std::string format_patch_csv(const Patch& p) {
    std::ostringstream os;
    for (const Face& f : p) {
        for (int k = 0; k < f.x.dim(); ++k) os << f.x[k] << ",";
        os << f.i << "\n";
    }
    return os.str();
}

Patch parse_patch_csv(const std::string& text, int d) {
    std::istringstream is(text);
    std::string line;
    Patch p;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (static_cast<int>(cells.size()) != d + 1)
            throw std::invalid_argument("parse_patch_csv: expected " + std::to_string(d + 1) + " columns");
        Face f;
        f.x = IntVec(d);
        for (int k = 0; k < d; ++k) f.x[k] = BigInt(cells[static_cast<std::size_t>(k)]);
        f.i = std::stoi(cells[static_cast<std::size_t>(d)]);
        p.insert(std::move(f));
    }
    return p;
}

std::string format_cloud_csv(const LabeledCloud& c) {
    std::ostringstream os;
    os.precision(17);
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (double x : c.points[k]) os << x << ",";
        os << c.labels[k] << "\n";
    }
    return os.str();
}

DirectiveSequence parse_directive_spec(const std::string& spec) {
    std::istringstream is(spec);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw std::invalid_argument("parse_directive_spec: empty spec");

    if (tokens.front() == "brun:") {
        if (tokens.size() != 3) throw std::invalid_argument("parse_directive_spec: brun: needs x1 x2");
        SimplexPoint p{std::stod(tokens[1]), std::stod(tokens[2])};
        return brun_directive(p);
    }

    auto lookup = [](const std::string& t) -> Substitution {
        if (t.size() == 2 && (t[0] == 'a' || t[0] == 'b' || t[0] == 's') && t[1] >= '1' && t[1] <= '3') {
            std::size_t idx = static_cast<std::size_t>(t[1] - '1');
            if (t[0] == 'a') return ar_substitutions()[idx];
            if (t[0] == 'b') return brun_substitutions()[idx];
            return brun_sigma_substitutions()[idx];
        }
        throw std::invalid_argument("parse_directive_spec: unknown token '" + t + "'");
    };

    std::vector<Substitution> prefix, block;
    bool in_block = false;
    for (const std::string& t : tokens) {
        if (t == "periodic:") {
            if (in_block) throw std::invalid_argument("parse_directive_spec: duplicate periodic: marker");
            in_block = true;
            continue;
        }
        (in_block ? block : prefix).push_back(lookup(t));
    }
    if (in_block) {
        if (block.empty()) throw std::invalid_argument("parse_directive_spec: empty periodic block");
        return DirectiveSequence::eventually_periodic(std::move(prefix), std::move(block));
    }
    return DirectiveSequence::finite(std::move(prefix));
}

std::string histogram_json(const CoverHistogram& h) {
    json counts = json::object();
    for (auto& [m, c] : h.counts) counts[std::to_string(m)] = c;
    json j{{"counts", counts}, {"epsilon", h.epsilon}, {"samples", h.samples}, {"seed", h.seed}};
    return j.dump(2) + "\n";
}

std::string coding_report_json(const CodingReport& r) {
    json j{{"matched", r.matched},
           {"ambiguous", r.ambiguous},
           {"mismatched", r.mismatched},
           {"horizon", r.horizon}};
    return j.dump(2) + "\n";
}

std::string lyapunov_report_json(const LyapunovReport& r, const PisotCheck& check) {
    json j{{"theta1", r.theta1},
           {"theta1_se", r.theta1_se},
           {"theta2", r.theta2},
           {"theta2_se", r.theta2_se},
           {"theta_sum", r.theta_sum},
           {"theta_sum_se", r.theta_sum_se},
           {"n_steps", r.n_steps},
           {"trials", r.trials},
           {"seed", r.seed},
           {"pisot", check.satisfied},
           {"volume_ok", check.volume_ok},
           {"confidence", check.confidence}};
    return j.dump(2) + "\n";
}

std::string price_report_json(const PriceReport& r) {
    json j;
    if (r.primitivity_window)
        j["primitivity_window"] = *r.primitivity_window;
    else
        j["primitivity_window"] = nullptr;
    j["recurrence"] = json::array();
    for (const auto& w : r.recurrence) {
        json e{{"len", w.len}, {"n", w.n}};
        if (w.block_end_positive_h)
            e["block_end_positive_h"] = *w.block_end_positive_h;
        else
            e["block_end_positive_h"] = nullptr;
        j["recurrence"].push_back(e);
    }
    j["irreducibility"] = json::array();
    for (const auto& c : r.irreducibility)
        j["irreducibility"].push_back(json{{"k", c.k}, {"l", c.l}, {"irreducible", c.irreducible}});
    j["balance"] = json::array();
    for (const auto& b : r.balance)
        j["balance"].push_back(json{{"level", b.level}, {"constant", b.constant}});
    return j.dump(2) + "\n";
}

std::string discrepancy_json(const RealVec& per_letter, long balance) {
    json j{{"per_letter_discrepancy", per_letter}, {"balance_constant", balance}};
    return j.dump(2) + "\n";
}

std::string expansion_json(const BrunExpansion& e) {
    std::string digits;
    for (int d : e.digits) digits += static_cast<char>('0' + d);
    json j{{"digits", digits}, {"complete", e.complete}};
    return j.dump(2) + "\n";
}

namespace {

json vec_json(const IntVec& v) {
    json a = json::array();
    for (int k = 0; k < v.dim(); ++k) a.push_back(v[k].str());
    return a;
}

IntVec vec_from_json(const json& a) {
    IntVec v(static_cast<int>(a.size()));
    for (int k = 0; k < v.dim(); ++k) v[k] = BigInt(a[static_cast<std::size_t>(k)].get<std::string>());
    return v;
}

}  // namespace

std::string coincidence_witness_json(const CoincidenceWitness& w, const std::string& seq_spec) {
    json pairs = json::array();
    for (const auto& c : w.pairs)
        pairs.push_back(json{{"j1", c.j1},
                             {"j2", c.j2},
                             {"i", c.i},
                             {"pos1", c.pos1},
                             {"pos2", c.pos2},
                             {"abel", vec_json(c.abel)}});
    json j{{"kind", w.kind == CoincidenceWitness::Kind::strong ? "strong" : "negative_strong"},
           {"l", w.l},
           {"pairs", pairs},
           {"seq", seq_spec}};
    return j.dump(2) + "\n";
}

std::string geometric_witness_json(const GeometricWitness& w, const std::string& seq_spec) {
    json j{{"kind", "geometric"},
           {"n", w.n},
           {"C", w.balance},
           {"i", w.i},
           {"z", w.z},
           {"ball_faces", w.ball_faces},
           {"seq", seq_spec}};
    return j.dump(2) + "\n";
}

std::string finiteness_json(const DirectiveSequence& seq, std::size_t n, long radius, bool holds,
                            const std::string& seq_spec) {
    (void)seq;
    json j{{"kind", "finiteness"}, {"n", n}, {"radius", radius}, {"holds", holds}, {"seq", seq_spec}};
    return j.dump(2) + "\n";
}

bool reverify_witness_json(const std::string& json_text) {
    json j = json::parse(json_text);
    const std::string kind = j.at("kind").get<std::string>();
    DirectiveSequence seq = parse_directive_spec(j.at("seq").get<std::string>());
    if (kind == "strong" || kind == "negative_strong") {
        CoincidenceWitness w;
        w.kind = kind == "strong" ? CoincidenceWitness::Kind::strong
                                  : CoincidenceWitness::Kind::negative_strong;
        w.l = j.at("l").get<std::size_t>();
        for (const auto& p : j.at("pairs")) {
            CoincidenceWitness::PairCert c;
            c.j1 = p.at("j1").get<Letter>();
            c.j2 = p.at("j2").get<Letter>();
            c.i = p.at("i").get<Letter>();
            c.pos1 = p.at("pos1").get<std::size_t>();
            c.pos2 = p.at("pos2").get<std::size_t>();
            c.abel = vec_from_json(p.at("abel"));
            w.pairs.push_back(std::move(c));
        }
        return verify_coincidence(seq, w);
    }
    if (kind == "geometric") {
        GeometricWitness w;
        w.n = j.at("n").get<std::size_t>();
        w.balance = j.at("C").get<long>();
        w.i = j.at("i").get<Letter>();
        w.z = j.at("z").get<RealVec>();
        w.ball_faces = j.at("ball_faces").get<std::size_t>();
        RealVec u = right_eigenvector_approx(seq, w.n);
        return verify_geometric(seq, w, u);
    }
    if (kind == "finiteness") {
        std::size_t n = j.at("n").get<std::size_t>();
        long radius = j.at("radius").get<long>();
        bool holds = j.at("holds").get<bool>();
        return geometric_finiteness_check(seq, n, radius) == holds;
    }
    throw std::invalid_argument("reverify_witness_json: unknown kind '" + kind + "'");
}

}  // namespace sadic
