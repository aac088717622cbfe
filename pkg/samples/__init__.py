"""Sample payloads and helper scripts for probkit."""
