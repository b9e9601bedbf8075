#include "lrc/report.hpp"

namespace lrc {

ReportNode& ReportNode::add(const std::string& key, const std::string& value) {
    children_.emplace_back(key, value);
    return children_.back();
}

ReportNode& ReportNode::add_child(ReportNode node) {
    children_.push_back(std::move(node));
    return children_.back();
}

void ReportNode::write(std::string& out, int indent) const {
    for (int i = 0; i < indent; ++i) out += "  ";
    out += key_;
    out += ":";
    if (!value_.empty()) {
        out += " ";
        out += value_;
    }
    out += "\n";
    for (const ReportNode& c : children_) c.write(out, indent + 1);
}

std::string Report::str() const {
    std::string out;
    out += "command: " + command + "\n";
    out += std::string("status: ") + (ok ? "ok" : "FAILED") + "\n";
    for (const ReportNode& c : body.children()) c.write(out, 0);
    return out;
}

}  // namespace lrc
