/*
 * Copyright 2026 The spyscan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Declarative checks over an InteractionLog.
//
//     spy::assert_called_times(*log, "it", spy::EventKind::next, i);
//     spy::verify(*log, "it").next().called(i);
//     spy::verify(*log, "it").next().never();

#include <spyscan/spy/interaction_log.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spyscan::spy {

class VerificationFailure : public std::runtime_error {
public:
    VerificationFailure(std::string subject, EventKind kind, std::size_t wanted, std::size_t actual,
                        std::vector<std::uint64_t> offending, const std::string& message);

    const std::string& subject() const { return subject_; }
    EventKind kind() const { return kind_; }
    std::size_t wanted() const { return wanted_; }
    std::size_t actual() const { return actual_; }
    /// Unwanted invocations when there were too many; the invocations seen so
    /// far when there were too few.
    const std::vector<std::uint64_t>& offending() const { return offending_; }

private:
    std::string subject_;
    EventKind kind_;
    std::size_t wanted_;
    std::size_t actual_;
    std::vector<std::uint64_t> offending_;
};

std::optional<VerificationFailure> check_called_times(const InteractionLog& log, std::string_view subject,
                                                      EventKind kind, std::size_t wanted);

/// Throws VerificationFailure unless exactly `wanted` matching events exist.
void assert_called_times(const InteractionLog& log, std::string_view subject, EventKind kind, std::size_t wanted);

void assert_never(const InteractionLog& log, std::string_view subject, EventKind kind);

class KindVerifier {
public:
    KindVerifier(const InteractionLog& log, std::string subject, EventKind kind)
        : log_(log), subject_(std::move(subject)), kind_(kind)
    {
    }

    void called(std::size_t times) const { assert_called_times(log_, subject_, kind_, times); }
    void never() const { assert_never(log_, subject_, kind_); }

private:
    const InteractionLog& log_;
    std::string subject_;
    EventKind kind_;
};

class Verifier {
public:
    Verifier(const InteractionLog& log, std::string subject) : log_(log), subject_(std::move(subject)) {}

    KindVerifier has_next() const { return {log_, subject_, EventKind::has_next}; }
    KindVerifier next() const { return {log_, subject_, EventKind::next}; }
    KindVerifier apply() const { return {log_, subject_, EventKind::apply}; }

private:
    const InteractionLog& log_;
    std::string subject_;
};

inline Verifier verify(const InteractionLog& log, std::string subject)
{
    return Verifier(log, std::move(subject));
}

}  // namespace spyscan::spy
