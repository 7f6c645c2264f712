#include "xxchain/table.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace xxchain {

std::string format_double(double v) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (res.ec != std::errc{})
    throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), res.ptr);
}

std::string to_csv(const SweepTable& table) {
  std::string out;
  out += "# command: " + table.command + "\n";
  if (table.n) out += "# n: " + std::to_string(*table.n) + "\n";
  if (!table.sites.empty()) {
    out += "# sites:";
    for (int s : table.sites) out += " " + std::to_string(s);
    out += "\n";
  }
  if (!table.observable.empty())
    out += "# observable: " + table.observable + "\n";
  if (!table.notes.empty()) out += "# notes: " + table.notes + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ",";
    out += table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += format_double(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  nlohmann::json meta;
  meta["command"] = table.command;
  if (table.n)
    meta["n"] = *table.n;
  else
    meta["n"] = nullptr;
  meta["sites"] = table.sites;
  meta["observable"] = table.observable;
  meta["notes"] = table.notes;
  nlohmann::json doc;
  doc["meta"] = meta;
  doc["rows"] = table.rows;
  return doc.dump() + "\n";
}

}  // namespace xxchain
