#pragma once

#include <string>
#include <vector>

namespace lrc {

// Deterministic nested key-value report. Keys keep insertion order; all
// numbers are exact strings, never floating point.
class ReportNode {
public:
    ReportNode() = default;
    ReportNode(std::string key, std::string value) : key_(std::move(key)), value_(std::move(value)) {}

    ReportNode& add(const std::string& key, const std::string& value = "");
    ReportNode& add_child(ReportNode node);

    const std::string& key() const { return key_; }
    const std::string& value() const { return value_; }
    const std::vector<ReportNode>& children() const { return children_; }

    void write(std::string& out, int indent) const;

private:
    std::string key_, value_;
    std::vector<ReportNode> children_;
};

struct Report {
    std::string command;
    bool ok = true;
    ReportNode body;

    std::string str() const;
};

}  // namespace lrc
