#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tock2ta/ta/model.hpp"

namespace tock2ta::xml {

/// Malformed or unsupported documents.
class XmlError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// UPPAAL 4.x flat XML. Channel kinds and the environment travel in one
/// leading comment so the file stays loadable by stock UPPAAL.
std::string emit(const ta::NetworkModel& net);

/// Reads the dialect written by emit(); foreign files are accepted as long
/// as they use only the constructs emit() produces. Without the kinds
/// comment, kinds are inferred from the reserved channel-name patterns.
ta::NetworkModel load(std::string_view document);

ta::NetworkModel loadFile(const std::string& path);
void saveFile(const ta::NetworkModel& net, const std::string& path);

/// Text forms shared by the emitter and loader.
std::string formatConjunction(const ta::Conjunction& c);
std::string formatUpdates(const std::vector<ta::Update>& u);

}  // namespace tock2ta::xml
