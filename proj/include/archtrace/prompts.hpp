#pragma once

#include <string>
#include <string_view>

namespace archtrace::prompts {

/// First extraction prompt: elaborate on the documentation.
/// Placeholder: {Software Architecture Documentation}
inline constexpr std::string_view kDocToArchitecture1 =
    "Your task is to identify the high-level components based on the software architecture "
    "documentation. In a first step, you shall elaborate on the following documentation: "
    "{Software Architecture Documentation}";

/// Second extraction prompt: reduce the elaboration to a dash list of names.
inline constexpr std::string_view kDocToArchitecture2 =
    "Now provide a list that only covers the component names. Omit common prefixes and suffixes "
    "in the names in camel case.\n"
    "Output format:\n"
    "- Name1\n"
    "- Name2";

/// Code-side extraction prompt. Placeholders: {Features} (feature name) and
/// {Content} (feature body).
inline constexpr std::string_view kCodeToArchitecture1 =
    "You get the {Features} of a software project. Your task is to summarize the {Features} "
    "w.r.t. the high-level architecture of the system. Try to identify possible components. "
    "{Features}: {Content}";

/// Aggregation prompt over candidate names from both sources.
/// Placeholder: {Possible Component Names}
inline constexpr std::string_view kAggregation =
    "You get a list of possible component names. Your task is to aggregate the list and remove "
    "duplicates. Omit common prefixes and suffixes in the names in camel case.\n"
    "Output format:\n"
    "- Name1\n"
    "- Name2\n"
    "Possible component names: {Possible Component Names}";

/// Entity-recognition task prompt (returns structured plain text).
inline constexpr std::string_view kEntityRecognitionTask =
    R"(Identify all architecturally relevant software components that are explicitly named in the following text.

For each identified component, provide:
- The primary name (as it appears in the text)
- All alternative names or abbreviations used for the same component in the text (case-insensitive)
- All full lines where the component is mentioned (directly or via clear context)

Rules for identifying components:

1. Only include explicit modular software components with distinct technical responsibilities. These may include:
   - services (e.g., UserService)
   - APIs (e.g., PaymentAPI)
   - adapters, handlers, managers, routers, engines
   - infrastructure components (e.g., Media Server, Presentation Conversion Pipeline)
   - client-side or server-side subsystems (e.g., electron client, backend server)

2. Exclude domain-level entities, even if capitalized - such as business data objects, file types, or general functionalities - unless used as part of a named technical unit.
   Do not include non-technical concepts even if mentioned with verbs like "convert", "generate", or "store" - these are often subject-side actions unless framed as components.

   Examples of domain terms (do not include):
   - image - "Each item includes an image."
   - recommendation - "Recommendations are generated..."
   - file - "Uploads include a JSON file."
   - session - "Each session is stored separately."
   - presentation - "Uploaded presentations go through conversion..."


   Include only when wrapped in named software components that perform active, modular responsibilities (if explicitly named and described).

3. DO include technical subsystems described with proper software roles, and clearly scoped:
   - (Web) server - if described as a component implementing client-server communication or event dispatching
   - (Web) client - if described as rendering or subscribing to events/data
   - Media Server / MS - as a media streaming component implementing SFU/MCU

4. Do not include:
   - Package, class, or namespace names (e.g., common.util, x.y.z)
   - Interfaces (unless directly implemented and deployed)
   - General use of technologies or third-party tools like "React" or "Spring" unless internally wrapped as system components

5. A component is valid if:
   a) Its name includes a functional suffix or architecture-relevant term (Service, Client, Engine, Manager, Adapter, Server, Router, Converter, etc.)
   OR
   b) The text clearly describes it as implementing a technical function within the system (e.g., routing requests, synchronizing state, managing media streams)

6. Reverse pronoun references are allowed only when strongly tied to a previously named component across adjacent lines.
   Do not infer vague or implied components through generic phrases like:
   - it handles the process
   - this system
   - the module

7. Do not create implied components from action nouns (e.g., "conversion", "delivery", "recommendation") unless these are mentioned as named, distinct architectural elements.

8. If an external technology (e.g., MongoDB, Redis, etc.) is used in a custom component (e.g., our RedisPublisher, or MongoSyncService), include that named component - not the technology itself.


Return the results in a clearly structured, unambiguous plain-text format that enables straightforward conversion to JSON (e.g., using key-value sections per component).)";

/// Formatting prompt that turns the plain-text answer into a JSON array.
inline constexpr std::string_view kEntityFormatting =
    R"(Given the last answer (see below), for each component, return a JSON object containing:
- "name": the primary name of the component (use the most descriptive name).
- "type": "COMPONENT"
- "alternativeNames": a list of alternative or ambiguous names, if applicable.
- "occurrences": a list of lines where the component appears or is referenced.

Output should be a JSON array (and nothing else!), like:
[
    {
        "name": "...",
        "type": "COMPONENT",
        "alternativeNames": [...],
        "occurrences": [...]
    },
    ...
]

Example:
[
    {
        "name": "AuthenticationService",
        "type": "COMPONENT",
        "alternativeNames": ["service"],
        "occurrences": ["The AuthenticationService handles login requests.", "It forwards valid credentials to the UserDatabase.", "The service logs each attempt."]
    },
    {
        "name": "UserDatabase",
        "type": "COMPONENT",
        "alternativeNames": ["DB"],
        "occurrences": ["It forwards valid credentials to the UserDatabase.", "The DB then validates the credentials."]
    }
])";

/// Replace every occurrence of a {placeholder} in a template.
std::string substitute(std::string_view prompt_template, std::string_view placeholder,
                       std::string_view value);

} // namespace archtrace::prompts
