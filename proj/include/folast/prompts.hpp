#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace folast::backend {

/// Version marker for the shipped prompt set; bump when any asset changes.
inline constexpr int kPromptVersion = 1;

struct PromptSpec {
    std::string schema_id;
    std::string_view system_prompt; // asset text, ends at "Now, it is your turn"
    std::string answer_token;       // "Answer:" or "Output:" per prompt
};

const std::vector<PromptSpec>& all_prompts();
const PromptSpec& prompt_for(std::string_view schema_id); // throws std::out_of_range

/// Renders the user turn that follows the system prompt:
///   Input: "<sentence>"
///   <answer token>
std::string user_message(const PromptSpec& spec, std::string_view sentence);

} // namespace folast::backend
