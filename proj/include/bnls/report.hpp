#pragma once

// Text renderings of the locus tables and relation reports: aligned
// markdown, CSV, and a plain-text containment listing.  All output is
// ASCII and deterministic.

#include <iomanip>
#include <sstream>

#include "bnls/bounds_loci.hpp"

namespace bnls {

inline std::string locus_label(const LocusId& L) {
  std::ostringstream os;
  os << "M^" << L.r << "_{" << L.g << "," << L.d << "}";
  return os.str();
}

inline std::string range_label(const ExistenceRange& range) {
  std::ostringstream os;
  if (range.empty()) return "none";
  if (range.parity)
    os << (*range.parity == 0 ? "even" : "odd") << " t, " << range.lo
       << " <= t <= " << range.hi;
  else
    os << "[" << range.lo << ", " << range.hi << "]";
  return os.str();
}

namespace detail {

inline std::string md_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << "|";
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& cell = i < rows.size() && c < rows[i].size()
                                    ? rows[i][c]
                                    : std::string();
      os << " " << cell << std::string(width[c] - cell.size(), ' ') << " |";
    }
    os << "\n";
    if (i == 0) {
      os << "|";
      for (std::size_t c = 0; c < width.size(); ++c)
        os << std::string(width[c] + 2, '-') << "|";
      os << "\n";
    }
  }
  return os.str();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << csv_escape(row[c]);
    os << "\n";
  }
  return os.str();
}

}  // namespace detail

/// One locus table evaluated at (g1, g2): existence range and smallest
/// excluded torsion, one row per locus.
inline std::vector<std::vector<std::string>> locus_table_rows(
    const std::vector<LocusId>& loci, Int g1, Int g2) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"locus", "existence t-range", "nonexistence t >="});
  for (const LocusId& L : loci) {
    const ExistenceRange range = existence_range(L.g, L.r, L.d, g1, g2);
    rows.push_back({locus_label(L), range_label(range),
                    std::to_string(nonexistence_threshold(L.g, L.r, L.d, g1, g2))});
  }
  return rows;
}

/// The genus-34 tables: the four higher-rank loci and the pencil locus,
/// each evaluated at (16,16) and (17,15).
inline std::string render_table34(const std::string& format) {
  std::vector<LocusId> high, pencil;
  for (const LocusId& L : enumerate_loci(34, {-1, -2}))
    (L.r >= 2 ? high : pencil).push_back(L);

  struct Block {
    std::string title;
    std::vector<std::vector<std::string>> rows;
  };
  std::vector<Block> blocks;
  for (const auto& [g1, g2] : {std::pair<Int, Int>{16, 16}, {17, 15}}) {
    std::ostringstream title;
    title << "Table 1 (r >= 2), (g1,g2) = (" << g1 << "," << g2 << ")";
    blocks.push_back({title.str(), locus_table_rows(high, g1, g2)});
  }
  for (const auto& [g1, g2] : {std::pair<Int, Int>{16, 16}, {17, 15}}) {
    std::ostringstream title;
    title << "Table 2 (r = 1), (g1,g2) = (" << g1 << "," << g2 << ")";
    blocks.push_back({title.str(), locus_table_rows(pencil, g1, g2)});
  }

  std::ostringstream os;
  if (format == "csv") {
    for (const Block& b : blocks) {
      os << "# " << b.title << "\n" << detail::csv_table(b.rows);
    }
  } else {  // md / text
    os << "# Brill-Noether loci of genus 34 on two-bridge chains\n";
    for (const Block& b : blocks)
      os << "\n## " << b.title << "\n\n" << detail::md_table(b.rows);
  }
  return os.str();
}

/// Canonical containment statement:
///   Delta(g1,g2;2,t) c= A n B - (C u D)
inline std::string statement_label(const RelationReport& rep,
                                   const RelationStatement& st) {
  std::ostringstream os;
  os << "Delta(" << rep.g1 << "," << rep.g2 << ";2," << st.t << ") c= ";
  for (std::size_t i = 0; i < st.in_loci.size(); ++i)
    os << (i ? " n " : "") << locus_label(st.in_loci[i]);
  if (!st.out_loci.empty()) {
    os << " - (";
    for (std::size_t i = 0; i < st.out_loci.size(); ++i)
      os << (i ? " u " : "") << locus_label(st.out_loci[i]);
    os << ")";
  }
  return os.str();
}

inline std::string render_relations(const RelationReport& rep,
                                    const std::string& format) {
  std::vector<std::vector<std::string>> rows;
  {
    std::vector<std::string> header{"t"};
    for (const LocusId& L : rep.loci) header.push_back(locus_label(L));
    rows.push_back(std::move(header));
  }
  for (const RelationRow& row : rep.rows) {
    std::vector<std::string> cells{std::to_string(row.t)};
    for (LocusClass c : row.classes) cells.emplace_back(to_string(c));
    rows.push_back(std::move(cells));
  }

  std::ostringstream os;
  if (format == "csv") {
    os << detail::csv_table(rows);
    for (const RelationStatement& st : rep.statements)
      os << "statement," << detail::csv_escape(statement_label(rep, st)) << "\n";
    return os.str();
  }
  os << "# Locus relations for genus " << rep.g << " at (g1,g2) = (" << rep.g1
     << "," << rep.g2 << ")\n\n";
  os << detail::md_table(rows) << "\n";
  for (const RelationStatement& st : rep.statements)
    os << statement_label(rep, st) << "\n";
  return os.str();
}

}  // namespace bnls
