#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fogsim/rng.hpp"
#include "fogsim/sim_time.hpp"

namespace fogsim {

using Bytes = std::vector<uint8_t>;

struct KeyPair {
  Bytes public_part;
  Bytes private_part;
  std::string scheme_tag;
};

struct Certificate {
  std::string subject_id;
  Bytes subject_public;
  std::string issuer_id;
  Bytes issuer_signature;  // over (subject_id, subject_public, validity)
  SimTime not_before;
  SimTime not_after;
};

struct TrustRoot {
  Bytes root_public;
  std::string root_id;
};

// Pluggable signature scheme. Two implementations:
//   "sim-hmac" — deterministic, non-cryptographic stand-in for large sweeps.
//                The signature embeds the signing key, so it is forgeable by
//                anyone holding a previous signature; simulated adversaries
//                never do that, and the soundness property tests only exercise
//                honest-key/corrupted-message cases.
//   "rsa2048"  — RSA-2048 with SHA-256 (OpenSSL) for integration realism.
class SignatureScheme {
 public:
  virtual ~SignatureScheme() = default;
  virtual std::string name() const = 0;
  virtual KeyPair generate_keypair(RngStream& rng) = 0;
  virtual Bytes sign(const Bytes& private_part, std::span<const uint8_t> payload) const = 0;
  virtual bool verify(const Bytes& public_part, std::span<const uint8_t> payload,
                      const Bytes& signature) const = 0;
};

std::unique_ptr<SignatureScheme> make_sim_scheme();
std::unique_ptr<SignatureScheme> make_rsa_scheme();
std::unique_ptr<SignatureScheme> make_scheme(const std::string& name);  // ConfigError on unknown

enum class VerifyCode : uint8_t {
  Ok,
  UntrustedIssuer,
  Expired,
  NotYetValid,
  BadSignature,
  Tampered,
};

const char* verify_code_name(VerifyCode code);

struct VerifyResult {
  bool ok = false;
  VerifyCode code = VerifyCode::BadSignature;
};

// Throws ConfigError(InvalidWindow) when not_after <= not_before.
Certificate issue_certificate(const SignatureScheme& scheme, const KeyPair& root_keys,
                              const std::string& root_id, const std::string& subject_id,
                              const Bytes& subject_public, SimTime not_before, SimTime not_after);

VerifyResult verify_chain(const SignatureScheme& scheme, const Certificate& cert,
                          const TrustRoot& root, SimTime now);

struct SignedEnvelope {
  std::string signer_id;
  Bytes payload;
  Bytes signature;
};

SignedEnvelope sign_message(const SignatureScheme& scheme, const KeyPair& keys,
                            const std::string& signer_id, std::span<const uint8_t> payload);

VerifyResult verify_message(const SignatureScheme& scheme, const SignedEnvelope& envelope,
                            const Certificate& sender_cert, const TrustRoot& root, SimTime now);

// ---------------------------------------------------------------------------
// Mutual authentication between firewalls: 4-message challenge-response.
//   M1  A->B  Hello        cert_A, nonce_A
//   M2  B->A  HelloReply   cert_B, nonce_B, sig_B(transcript, nonce_A)
//   M3  A->B  Confirm      sig_A(transcript, nonce_B)
//   M4  B->A  Ack
// Established requires the peer certificate chain and the fresh-nonce
// signature to verify on both sides.
// ---------------------------------------------------------------------------

enum class HsPhase : uint8_t { Init, HelloSent, PeerVerified, Established, Failed };
enum class HsFail : uint8_t { None, BadCertificate, BadSignature, NonceReplay, Timeout };

const char* hs_phase_name(HsPhase phase);
const char* hs_fail_name(HsFail reason);

enum class HsMsgType : uint8_t { Hello, HelloReply, Confirm, Ack };

struct HandshakeMsg {
  HsMsgType type = HsMsgType::Hello;
  std::string from;
  std::string to;
  Certificate cert;  // Hello / HelloReply
  uint64_t nonce = 0;
  Bytes signature;  // HelloReply / Confirm
};

struct HandshakeState {
  std::string local_id;
  std::string peer_id;
  bool initiator = false;
  HsPhase phase = HsPhase::Init;
  HsFail fail = HsFail::None;
  uint64_t local_nonce = 0;
  uint64_t peer_nonce = 0;
  Certificate peer_cert;
};

// Per-node view the handshake steps against; `seen_nonces` is node-wide so a
// replayed Hello is rejected across sessions.
struct HandshakeContext {
  const SignatureScheme* scheme = nullptr;
  const TrustRoot* root = nullptr;
  const KeyPair* local_keys = nullptr;
  const Certificate* local_cert = nullptr;
  std::unordered_set<uint64_t>* seen_nonces = nullptr;
  SimTime now;
};

// Initiator's opening move: emits M1 and advances Init -> HelloSent.
HandshakeMsg handshake_start(HandshakeContext& ctx, HandshakeState& state, uint64_t nonce);

struct HandshakeStepResult {
  std::vector<HandshakeMsg> outgoing;
};

// Deterministic transition on one incoming message. Failures land in
// state.phase == Failed with state.fail set; never throws.
HandshakeStepResult handshake_step(HandshakeContext& ctx, HandshakeState& state,
                                   const HandshakeMsg& incoming, uint64_t fresh_nonce);

}  // namespace fogsim
