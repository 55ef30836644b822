#include "prefdom/soc.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "prefdom/errors.hpp"

namespace prefdom {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::int64_t parse_count(const std::string& tok, int line_no) {
    if (!all_digits(trim(tok)))
        throw parse_error("soc line " + std::to_string(line_no) + ": invalid count '" + tok + "'");
    return std::stoll(trim(tok));
}

std::vector<int> parse_ranking(const std::string& text, int n, int line_no) {
    if (text.find('{') != std::string::npos || text.find('}') != std::string::npos)
        throw parse_error("soc line " + std::to_string(line_no) +
                          ": tied rankings are not supported (strict complete orders only)");
    std::vector<int> ranking;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        if (!all_digits(cur))
            throw parse_error("soc line " + std::to_string(line_no) + ": invalid alternative '" + cur + "'");
        ranking.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
        else cur.push_back(c);
    }
    flush();
    if (static_cast<int>(ranking.size()) != n)
        throw parse_error("soc line " + std::to_string(line_no) + ": expected a complete ranking of " +
                          std::to_string(n) + " alternatives, got " + std::to_string(ranking.size()));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int x : ranking) {
        if (x < 1 || x > n)
            throw parse_error("soc line " + std::to_string(line_no) + ": alternative " + std::to_string(x) +
                              " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(x)])
            throw parse_error("soc line " + std::to_string(line_no) + ": duplicate alternative " +
                              std::to_string(x));
        seen[static_cast<std::size_t>(x)] = true;
    }
    return ranking;
}

SocDocument parse_modern(const std::vector<std::pair<int, std::string>>& lines) {
    SocDocument doc;
    std::vector<std::pair<int, std::string>> names;
    for (const auto& [no, line] : lines) {
        if (line[0] == '#') {
            const std::string meta = trim(line.substr(1));
            const auto colon = meta.find(':');
            if (colon == std::string::npos) continue;
            const std::string key = trim(meta.substr(0, colon));
            const std::string value = trim(meta.substr(colon + 1));
            if (key == "NUMBER ALTERNATIVES") doc.num_alternatives = std::stoi(value);
            else if (key == "NUMBER VOTERS") doc.declared_voters = std::stoll(value);
            else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
                const std::string idx = trim(key.substr(17));
                if (all_digits(idx)) names.emplace_back(std::stoi(idx), value);
            }
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw parse_error("soc line " + std::to_string(no) + ": expected 'count: ranking'");
        if (doc.num_alternatives <= 0)
            throw parse_error("soc line " + std::to_string(no) +
                              ": data before '# NUMBER ALTERNATIVES' metadata");
        doc.rows.emplace_back(parse_count(line.substr(0, colon), no),
                              parse_ranking(line.substr(colon + 1), doc.num_alternatives, no));
    }
    doc.names.assign(static_cast<std::size_t>(doc.num_alternatives), "");
    for (const auto& [idx, name] : names)
        if (idx >= 1 && idx <= doc.num_alternatives) doc.names[static_cast<std::size_t>(idx - 1)] = name;
    return doc;
}

SocDocument parse_legacy(const std::vector<std::pair<int, std::string>>& lines) {
    SocDocument doc;
    std::size_t li = 0;
    doc.num_alternatives = std::stoi(lines[li++].second);
    if (doc.num_alternatives < 1)
        throw parse_error("soc line " + std::to_string(lines[0].first) + ": invalid alternative count");
    doc.names.assign(static_cast<std::size_t>(doc.num_alternatives), "");
    for (int i = 0; i < doc.num_alternatives; ++i, ++li) {
        if (li >= lines.size()) throw parse_error("soc file truncated in the alternative name block");
        const auto& [no, line] = lines[li];
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error("soc line " + std::to_string(no) + ": expected 'index,name'");
        doc.names[static_cast<std::size_t>(i)] = trim(line.substr(comma + 1));
    }
    if (li >= lines.size()) throw parse_error("soc file truncated before the voter count line");
    {
        const auto& [no, line] = lines[li++];
        std::istringstream ls(line);
        std::string tok;
        if (!std::getline(ls, tok, ','))
            throw parse_error("soc line " + std::to_string(no) + ": expected 'voters,sum,unique'");
        doc.declared_voters = parse_count(tok, no);
    }
    for (; li < lines.size(); ++li) {
        const auto& [no, line] = lines[li];
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw parse_error("soc line " + std::to_string(no) + ": expected 'count,ranking'");
        doc.rows.emplace_back(parse_count(line.substr(0, comma), no),
                              parse_ranking(line.substr(comma + 1), doc.num_alternatives, no));
    }
    return doc;
}

}  // namespace

SocDocument parse_soc_document(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string t = trim(raw);
        if (t.empty()) continue;
        lines.emplace_back(line_no, t);
    }
    if (lines.empty()) throw parse_error("empty soc file");
    // Legacy files open with a bare alternative count; everything else is the
    // '#'-metadata format.
    const bool legacy = all_digits(lines.front().second);
    SocDocument doc = legacy ? parse_legacy(lines) : parse_modern(lines);
    if (doc.num_alternatives < 1) throw parse_error("soc file does not declare its alternatives");
    if (doc.rows.empty()) throw parse_error("soc file contains no census rows");
    return doc;
}

Profile profile_from_soc(const SocDocument& doc) {
    std::vector<CensusEntry> census;
    census.reserve(doc.rows.size());
    std::int64_t total = 0;
    for (const auto& [count, ranking] : doc.rows) {
        total += count;
        census.push_back(CensusEntry{count, LinearOrder(ranking)});
    }
    if (doc.declared_voters >= 0 && total != doc.declared_voters)
        throw data_error("soc census sums to " + std::to_string(total) + " agents but the file declares " +
                         std::to_string(doc.declared_voters));
    return Profile(AlternativeSet::range(doc.num_alternatives), std::move(census));
}

Profile parse_soc(std::istream& in) { return profile_from_soc(parse_soc_document(in)); }

std::optional<int> universally_top_alternative(const Profile& p) {
    const int top = p.census().front().order.at(0);
    for (const auto& entry : p.census())
        if (entry.order.at(0) != top) return std::nullopt;
    return top;
}

std::vector<int> alternatives_by_popularity(const Profile& p) {
    const double total = static_cast<double>(p.num_agents());
    std::vector<std::pair<double, int>> ranked;  // (mean position, label)
    for (int i = 0; i < p.num_alternatives(); ++i) {
        const int label = p.alts().label(i);
        double sum = 0;
        for (const auto& entry : p.census())
            sum += static_cast<double>(entry.count) * entry.order.position_of(label);
        ranked.emplace_back(sum / total, label);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<int> out;
    out.reserve(ranked.size());
    for (const auto& [mean, label] : ranked) out.push_back(label);
    return out;
}

}  // namespace prefdom
