#include "folast/prompts.hpp"

#include <stdexcept>

#include <folast/assets_gen.hpp>

namespace folast::backend {

const std::vector<PromptSpec>& all_prompts() {
    static const std::vector<PromptSpec> registry = {
        {"selector", assets::k_prompts_selector, "Answer:"},
        {"quantified", assets::k_prompts_quantified, "Output:"},
        {"logical_binary", assets::k_prompts_logical_binary, "Output:"},
        {"logical_unary", assets::k_prompts_logical_unary, "Answer:"},
        {"atomic_dispatch", assets::k_prompts_atomic_dispatch, "Output:"},
        {"atomic_adjective", assets::k_prompts_atomic_adjective, "Answer:"},
        {"atomic_intransitive", assets::k_prompts_atomic_intransitive, "Answer:"},
        {"atomic_transitive", assets::k_prompts_atomic_transitive, "Answer:"},
        {"atomic_ditransitive", assets::k_prompts_atomic_ditransitive, "Answer:"},
    };
    return registry;
}

const PromptSpec& prompt_for(std::string_view schema_id) {
    for (const PromptSpec& spec : all_prompts())
        if (spec.schema_id == schema_id) return spec;
    throw std::out_of_range("no prompt for schema id: " + std::string(schema_id));
}

std::string user_message(const PromptSpec& spec, std::string_view sentence) {
    return "Input: \"" + std::string(sentence) + "\"\n" + spec.answer_token;
}

} // namespace folast::backend
