#include "splitcyc/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "splitcyc/error.hpp"

namespace splitcyc {

namespace {

using nlohmann::ordered_json;

ordered_json options_json(const SearchOptions& o) {
  ordered_json j;
  j["max_length"] = o.max_length ? ordered_json(*o.max_length) : ordered_json(nullptr);
  j["remark2"] = o.remark2;
  j["seam_remark2"] = o.seam_remark2;
  j["test4"] = o.test4;
  j["assume_transitive"] = o.assume_transitive;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string cycle_text(const std::vector<Vertex>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw Error(ErrorCode::InvalidParameter, "unknown format '" + name + "'");
}

std::string render(const SearchReport& r, Format format, bool include_run) {
  const TypeTable& t = r.table;
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      out << "embedding " << r.embedding << "  n=" << t.vertices << "  genus=" << t.genus << "  root=" << t.root
          << '\n';
      out << std::setw(6) << "type" << std::setw(10) << "NSC" << std::setw(12) << "min length" << '\n';
      for (const TypeRow& row : t.rows) {
        out << std::setw(6) << row.type << std::setw(10) << row.nsc << std::setw(12);
        if (row.min_length) out << row.min_length;
        else out << "-";
        out << '\n';
      }
      out << "visited nodes         " << t.visited << '\n';
      out << "contractible directed " << t.contractible_directed << '\n';
      out << "splitting directed    " << t.splitting_directed << '\n';
      out << "options               max_length=" << (r.options.max_length ? std::to_string(*r.options.max_length) : "none")
          << " remark2=" << (r.options.remark2 ? "on" : "off") << " seam_remark2=" << (r.options.seam_remark2 ? "on" : "off")
          << " test4=" << (r.options.test4 ? "on" : "off") << '\n';
      if (include_run)
        out << "wall time             " << std::fixed << std::setprecision(1) << r.wall_time_ms << " ms ("
            << r.options.workers << " workers)\n";
      break;
    }
    case Format::Csv: {
      out << "embedding,n,genus,root,type,nsc,min_length,visited,contractible_directed,splitting_directed\n";
      for (const TypeRow& row : t.rows)
        out << csv_field(r.embedding) << ',' << t.vertices << ',' << t.genus << ',' << t.root << ',' << row.type << ','
            << row.nsc << ',' << row.min_length << ',' << t.visited << ',' << t.contractible_directed << ','
            << t.splitting_directed << '\n';
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["report_version"] = kReportVersion;
      j["embedding"] = r.embedding;
      j["n"] = t.vertices;
      j["genus"] = t.genus;
      j["root"] = t.root;
      j["rows"] = ordered_json::array();
      for (const TypeRow& row : t.rows)
        j["rows"].push_back({{"type", row.type}, {"nsc", row.nsc}, {"min_length", row.min_length}});
      j["visited"] = t.visited;
      j["contractible_directed"] = t.contractible_directed;
      j["splitting_directed"] = t.splitting_directed;
      if (include_run) {
        j["wall_time_ms"] = r.wall_time_ms;
        j["workers"] = r.options.workers;
      }
      j["options"] = options_json(r.options);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

std::string render(const FamilyReport& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text: {
      out << "gross-tucker s=" << r.s << "  n=" << r.n << "  genus=" << r.genus
          << "  irreducible=" << (r.irreducible ? "yes" : "no") << '\n';
      for (const MemberCheck& m : r.members) {
        out << (m.passed() ? "PASS " : "FAIL ") << to_string(m.cycle.kind);
        if (m.cycle.kind == FamilyKind::GammaIK || m.cycle.kind == FamilyKind::GammaPrimeIK)
          out << " i=" << m.cycle.i << " k=" << m.cycle.k;
        if (m.cycle.kind == FamilyKind::TypeJ) out << " j=" << m.cycle.j;
        out << ' ' << cycle_text(m.cycle.vertices) << " claimed=" << m.cycle.claimed_type
            << " computed=" << m.computed_type;
        if (m.oracle_type != -1) out << " oracle=" << m.oracle_type;
        if (!m.note.empty()) out << "  [" << m.note << ']';
        out << '\n';
      }
      out << "distinct family cycles " << r.family_distinct << " (expected " << r.family_expected << ")\n";
      out << "family cycles in the gamma orbit " << r.overlaps_with_gamma_orbit << '\n';
      if (r.gamma_side_triangles >= 0)
        out << "gamma small side: " << r.gamma_side_triangles << " triangles, " << r.gamma_side_interior_edges
            << " interior edges\n";
      out << (r.all_passed() ? "all checks passed" : "some checks failed") << '\n';
      break;
    }
    case Format::Csv: {
      out << "s,kind,i,k,j,cycle,claimed_type,computed_type,oracle_type,passed,note\n";
      for (const MemberCheck& m : r.members)
        out << r.s << ',' << to_string(m.cycle.kind) << ',' << m.cycle.i << ',' << m.cycle.k << ',' << m.cycle.j << ','
            << csv_field(cycle_text(m.cycle.vertices)) << ',' << m.cycle.claimed_type << ',' << m.computed_type << ','
            << m.oracle_type << ',' << (m.passed() ? 1 : 0) << ',' << csv_field(m.note) << '\n';
      break;
    }
    case Format::Json: {
      ordered_json j;
      j["report_version"] = kReportVersion;
      j["s"] = r.s;
      j["n"] = r.n;
      j["genus"] = r.genus;
      j["irreducible"] = r.irreducible;
      j["family_distinct"] = r.family_distinct;
      j["family_expected"] = r.family_expected;
      j["overlaps_with_gamma_orbit"] = r.overlaps_with_gamma_orbit;
      j["gamma_side_triangles"] = r.gamma_side_triangles;
      j["gamma_side_interior_edges"] = r.gamma_side_interior_edges;
      j["members"] = ordered_json::array();
      for (const MemberCheck& m : r.members)
        j["members"].push_back({{"kind", to_string(m.cycle.kind)},
                                {"i", m.cycle.i},
                                {"k", m.cycle.k},
                                {"j", m.cycle.j},
                                {"cycle", m.cycle.vertices},
                                {"claimed_type", m.cycle.claimed_type},
                                {"computed_type", m.computed_type},
                                {"oracle_type", m.oracle_type},
                                {"passed", m.passed()},
                                {"note", m.note}});
      j["all_passed"] = r.all_passed();
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace splitcyc
