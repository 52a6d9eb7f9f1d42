#include "peonto/actions.hpp"

namespace peonto {
namespace {

struct Entry {
  const char* key;
  const char* value;
};

// Win32 / NT export name -> action id. Names are stored in canonical form:
// where an API ships A/W variants the suffix-free name is listed and lookup
// strips one trailing 'A' or 'W'. Exports that exist only in one form
// (CreateProcessWithLogonW, DnsQuery_A, ...) are listed verbatim.
constexpr Entry kApiToAction[] = {
    // AccessManagement
    {"AdjustTokenPrivileges", "modify-access-privileges"},
    {"ImpersonateLoggedOnUser", "impersonate-user"},
    {"ImpersonateNamedPipeClient", "impersonate-user"},
    {"LogonUser", "logon-user"},
    {"LookupPrivilegeValue", "modify-access-privileges"},
    {"NetUserAdd", "add-user"},
    {"NetUserDel", "remove-user"},
    {"NetUserEnum", "enumerate-users"},
    {"SetFileSecurity", "modify-access-privileges"},
    {"SetNamedSecurityInfo", "modify-access-privileges"},
    {"SetSecurityInfo", "modify-access-privileges"},

    // AntiDebugging
    {"CheckRemoteDebuggerPresent", "check-for-debugger"},
    {"ContinueDebugEvent", "debug-process"},
    {"DebugActiveProcess", "debug-process"},
    {"DebugActiveProcessStop", "debug-process"},
    {"DebugBreak", "debug-process"},
    {"IsDebuggerPresent", "check-for-debugger"},
    {"OutputDebugString", "check-for-debugger"},
    {"WaitForDebugEvent", "debug-process"},

    // Cryptography
    {"BCryptCreateHash", "hash-data"},
    {"BCryptDecrypt", "decrypt"},
    {"BCryptEncrypt", "encrypt"},
    {"BCryptGenRandom", "generate-random"},
    {"BCryptGenerateSymmetricKey", "generate-key"},
    {"BCryptHashData", "hash-data"},
    {"BCryptOpenAlgorithmProvider", "acquire-crypto-context"},
    {"CryptAcquireContext", "acquire-crypto-context"},
    {"CryptCreateHash", "hash-data"},
    {"CryptDecrypt", "decrypt"},
    {"CryptDeriveKey", "generate-key"},
    {"CryptEncrypt", "encrypt"},
    {"CryptGenKey", "generate-key"},
    {"CryptGenRandom", "generate-random"},
    {"CryptHashData", "hash-data"},
    {"CryptImportKey", "generate-key"},
    {"CryptReleaseContext", "acquire-crypto-context"},
    {"DecryptFile", "decrypt"},
    {"EncryptFile", "encrypt"},
    {"RtlGenRandom", "generate-random"},

    // DirectoryHandling
    {"CreateDirectory", "create-directory"},
    {"CreateDirectoryEx", "create-directory"},
    {"GetCurrentDirectory", "get-current-directory"},
    {"RemoveDirectory", "delete-directory"},
    {"SHCreateDirectoryEx", "create-directory"},
    {"SetCurrentDirectory", "set-current-directory"},

    // DiskManagement
    {"DefineDosDevice", "mount-disk"},
    {"DeleteVolumeMountPoint", "unmount-disk"},
    {"GetDiskFreeSpace", "get-disk-attributes"},
    {"GetDiskFreeSpaceEx", "get-disk-attributes"},
    {"GetDriveType", "enumerate-disks"},
    {"GetLogicalDrives", "enumerate-disks"},
    {"GetLogicalDriveStrings", "enumerate-disks"},
    {"GetVolumeInformation", "get-disk-attributes"},
    {"SetVolumeMountPoint", "mount-disk"},

    // FileHandling
    {"CopyFile", "copy-file"},
    {"CopyFileEx", "copy-file"},
    {"CreateFile", "create-file"},
    {"CreateFileMapping", "map-file-into-memory"},
    {"DeleteFile", "delete-file"},
    {"FindFirstFile", "find-file"},
    {"FindFirstFileEx", "find-file"},
    {"FindNextFile", "find-file"},
    {"FlushFileBuffers", "write-to-file"},
    {"GetFileAttributes", "get-file-attributes"},
    {"GetFileAttributesEx", "get-file-attributes"},
    {"GetFileInformationByHandle", "get-file-attributes"},
    {"GetFileSize", "get-file-attributes"},
    {"GetFileSizeEx", "get-file-attributes"},
    {"GetFileTime", "get-file-attributes"},
    {"GetFileType", "get-file-attributes"},
    {"LockFile", "lock-file"},
    {"LockFileEx", "lock-file"},
    {"MapViewOfFile", "map-file-into-memory"},
    {"MapViewOfFileEx", "map-file-into-memory"},
    {"MoveFile", "move-file"},
    {"MoveFileEx", "move-file"},
    {"MoveFileWithProgress", "move-file"},
    {"OpenFile", "create-file"},
    {"PathFileExists", "find-file"},
    {"ReadFile", "read-from-file"},
    {"ReadFileEx", "read-from-file"},
    {"SetEndOfFile", "modify-file-attributes"},
    {"SetFileAttributes", "modify-file-attributes"},
    {"SetFileTime", "modify-file-attributes"},
    {"UnlockFile", "unlock-file"},
    {"UnlockFileEx", "unlock-file"},
    {"UnmapViewOfFile", "map-file-into-memory"},
    {"WriteFile", "write-to-file"},
    {"WriteFileEx", "write-to-file"},

    // InterProcessCommunication
    {"CallNamedPipe", "connect-to-named-pipe"},
    {"ConnectNamedPipe", "connect-to-named-pipe"},
    {"CreateNamedPipe", "create-named-pipe"},
    {"CreatePipe", "create-named-pipe"},
    {"DisconnectNamedPipe", "connect-to-named-pipe"},
    {"PeekNamedPipe", "transact-named-pipe"},
    {"TransactNamedPipe", "transact-named-pipe"},
    {"WaitNamedPipe", "connect-to-named-pipe"},

    // LibraryHandling
    {"EnumProcessModules", "enumerate-libraries"},
    {"EnumProcessModulesEx", "enumerate-libraries"},
    {"FreeLibrary", "free-library"},
    {"FreeLibraryAndExitThread", "free-library"},
    {"GetProcAddress", "get-function-address"},
    {"LdrGetProcedureAddress", "get-function-address"},
    {"LdrLoadDll", "load-library"},
    {"LoadLibrary", "load-library"},
    {"LoadLibraryEx", "load-library"},
    {"Module32First", "enumerate-libraries"},
    {"Module32Next", "enumerate-libraries"},

    // Networking
    {"DnsQuery_A", "send-dns-query"},
    {"DnsQuery_W", "send-dns-query"},
    {"FtpDeleteFile", "send-ftp-command"},
    {"FtpGetFile", "send-ftp-command"},
    {"FtpOpenFile", "send-ftp-command"},
    {"FtpPutFile", "send-ftp-command"},
    {"GetAddrInfo", "send-dns-query"},
    {"HttpOpenRequest", "send-http-request"},
    {"HttpSendRequest", "send-http-request"},
    {"HttpSendRequestEx", "send-http-request"},
    {"Icmp6SendEcho2", "send-icmp-request"},
    {"IcmpSendEcho", "send-icmp-request"},
    {"IcmpSendEcho2", "send-icmp-request"},
    {"InternetConnect", "connect-to-url"},
    {"InternetOpen", "connect-to-url"},
    {"InternetOpenUrl", "send-http-request"},
    {"InternetReadFile", "read-from-url"},
    {"InternetReadFileEx", "read-from-url"},
    {"URLDownloadToCacheFile", "download-file"},
    {"URLDownloadToFile", "download-file"},
    {"WSAAccept", "accept-socket-connection"},
    {"WSAConnect", "connect-to-socket"},
    {"WSARecv", "receive-data-on-socket"},
    {"WSARecvFrom", "receive-data-on-socket"},
    {"WSASend", "send-data-on-socket"},
    {"WSASendTo", "send-data-on-socket"},
    {"WSASocket", "create-socket"},
    {"WinHttpConnect", "connect-to-url"},
    {"WinHttpOpen", "connect-to-url"},
    {"WinHttpOpenRequest", "send-http-request"},
    {"WinHttpReadData", "read-from-url"},
    {"WinHttpSendRequest", "send-http-request"},
    {"accept", "accept-socket-connection"},
    {"bind", "bind-address-to-socket"},
    {"closesocket", "close-socket"},
    {"connect", "connect-to-socket"},
    {"getaddrinfo", "send-dns-query"},
    {"gethostbyname", "send-dns-query"},
    {"listen", "listen-on-socket"},
    {"recv", "receive-data-on-socket"},
    {"recvfrom", "receive-data-on-socket"},
    {"send", "send-data-on-socket"},
    {"sendto", "send-data-on-socket"},
    {"shutdown", "close-socket"},
    {"socket", "create-socket"},

    // ProcessHandling
    {"CreateProcess", "create-process"},
    {"CreateProcessAsUser", "create-process"},
    {"CreateProcessWithLogonW", "create-process"},
    {"CreateProcessWithTokenW", "create-process"},
    {"CreateToolhelp32Snapshot", "enumerate-processes"},
    {"EnumProcesses", "enumerate-processes"},
    {"GetExitCodeProcess", "get-process-attributes"},
    {"IsWow64Process", "get-process-attributes"},
    {"NtAllocateVirtualMemory", "allocate-process-virtual-memory"},
    {"NtDelayExecution", "sleep-process"},
    {"NtFreeVirtualMemory", "free-process-virtual-memory"},
    {"NtOpenProcess", "open-process"},
    {"NtProtectVirtualMemory", "modify-process-virtual-memory-protection"},
    {"NtQueryInformationProcess", "get-process-attributes"},
    {"NtQuerySystemInformation", "enumerate-processes"},
    {"NtReadVirtualMemory", "read-from-process-memory"},
    {"NtTerminateProcess", "kill-process"},
    {"NtWriteVirtualMemory", "write-to-process-memory"},
    {"OpenProcess", "open-process"},
    {"OpenProcessToken", "open-process-token"},
    {"OpenThreadToken", "open-process-token"},
    {"Process32First", "enumerate-processes"},
    {"Process32Next", "enumerate-processes"},
    {"ReadProcessMemory", "read-from-process-memory"},
    {"ShellExecute", "create-process"},
    {"ShellExecuteEx", "create-process"},
    {"Sleep", "sleep-process"},
    {"SleepEx", "sleep-process"},
    {"TerminateProcess", "kill-process"},
    {"Toolhelp32ReadProcessMemory", "read-from-process-memory"},
    {"VirtualAlloc", "allocate-process-virtual-memory"},
    {"VirtualAllocEx", "allocate-process-virtual-memory"},
    {"VirtualFree", "free-process-virtual-memory"},
    {"VirtualFreeEx", "free-process-virtual-memory"},
    {"VirtualProtect", "modify-process-virtual-memory-protection"},
    {"VirtualProtectEx", "modify-process-virtual-memory-protection"},
    {"VirtualQuery", "query-process-virtual-memory"},
    {"VirtualQueryEx", "query-process-virtual-memory"},
    {"WinExec", "create-process"},
    {"WriteProcessMemory", "write-to-process-memory"},

    // RegistryHandling
    {"RegCloseKey", "close-registry-key"},
    {"RegConnectRegistry", "open-registry-key"},
    {"RegCreateKey", "create-registry-key"},
    {"RegCreateKeyEx", "create-registry-key"},
    {"RegDeleteKey", "delete-registry-key"},
    {"RegDeleteKeyEx", "delete-registry-key"},
    {"RegDeleteTree", "delete-registry-key"},
    {"RegDeleteValue", "delete-registry-key-value"},
    {"RegEnumKey", "enumerate-registry-keys"},
    {"RegEnumKeyEx", "enumerate-registry-keys"},
    {"RegEnumValue", "enumerate-registry-key-values"},
    {"RegGetValue", "read-registry-key-value"},
    {"RegLoadKey", "load-registry-hive"},
    {"RegNotifyChangeKeyValue", "monitor-registry-key"},
    {"RegOpenKey", "open-registry-key"},
    {"RegOpenKeyEx", "open-registry-key"},
    {"RegQueryInfoKey", "read-registry-key-value"},
    {"RegQueryValue", "read-registry-key-value"},
    {"RegQueryValueEx", "read-registry-key-value"},
    {"RegReplaceKey", "load-registry-hive"},
    {"RegRestoreKey", "load-registry-hive"},
    {"RegSetValue", "modify-registry-key-value"},
    {"RegSetValueEx", "modify-registry-key-value"},
    {"RegUnLoadKey", "unload-registry-hive"},
    {"SHDeleteKey", "delete-registry-key"},
    {"SHDeleteValue", "delete-registry-key-value"},
    {"SHGetValue", "read-registry-key-value"},
    {"SHSetValue", "modify-registry-key-value"},

    // ResourceSharing
    {"NetShareAdd", "add-network-share"},
    {"NetShareDel", "delete-network-share"},
    {"NetShareEnum", "enumerate-network-shares"},
    {"NetUseAdd", "connect-to-network-share"},
    {"NetUseDel", "disconnect-from-network-share"},
    {"WNetAddConnection", "connect-to-network-share"},
    {"WNetAddConnection2", "connect-to-network-share"},
    {"WNetAddConnection3", "connect-to-network-share"},
    {"WNetCancelConnection", "disconnect-from-network-share"},
    {"WNetCancelConnection2", "disconnect-from-network-share"},
    {"WNetCloseEnum", "enumerate-network-shares"},
    {"WNetEnumResource", "enumerate-network-shares"},
    {"WNetOpenEnum", "enumerate-network-shares"},

    // ServiceHandling
    {"ChangeServiceConfig", "modify-service-configuration"},
    {"ChangeServiceConfig2", "modify-service-configuration"},
    {"ControlService", "control-service"},
    {"ControlServiceEx", "control-service"},
    {"CreateService", "create-service"},
    {"DeleteService", "delete-service"},
    {"EnumServicesStatus", "enumerate-services"},
    {"EnumServicesStatusEx", "enumerate-services"},
    {"OpenSCManager", "open-service"},
    {"OpenService", "open-service"},
    {"QueryServiceConfig", "get-service-attributes"},
    {"QueryServiceConfig2", "get-service-attributes"},
    {"QueryServiceStatus", "get-service-attributes"},
    {"QueryServiceStatusEx", "get-service-attributes"},
    {"StartService", "start-service"},

    // SynchronizationPrimitivesHandling
    {"CreateEvent", "create-event"},
    {"CreateEventEx", "create-event"},
    {"CreateMutex", "create-mutex"},
    {"CreateMutexEx", "create-mutex"},
    {"CreateSemaphore", "create-semaphore"},
    {"CreateSemaphoreEx", "create-semaphore"},
    {"DeleteCriticalSection", "delete-critical-section"},
    {"EnterCriticalSection", "enter-critical-section"},
    {"InitializeCriticalSection", "create-critical-section"},
    {"InitializeCriticalSectionAndSpinCount", "create-critical-section"},
    {"InitializeCriticalSectionEx", "create-critical-section"},
    {"LeaveCriticalSection", "release-critical-section"},
    {"MsgWaitForMultipleObjects", "wait-for-object"},
    {"OpenEvent", "open-event"},
    {"OpenMutex", "open-mutex"},
    {"OpenSemaphore", "open-semaphore"},
    {"PulseEvent", "set-event"},
    {"ReleaseMutex", "release-mutex"},
    {"ReleaseSemaphore", "release-semaphore"},
    {"ResetEvent", "set-event"},
    {"SetEvent", "set-event"},
    {"SignalObjectAndWait", "wait-for-object"},
    {"TryEnterCriticalSection", "enter-critical-section"},
    {"WaitForMultipleObjects", "wait-for-object"},
    {"WaitForMultipleObjectsEx", "wait-for-object"},
    {"WaitForSingleObject", "wait-for-object"},
    {"WaitForSingleObjectEx", "wait-for-object"},

    // SystemManipulation
    {"BitBlt", "capture-screen"},
    {"CallNextHookEx", "add-windows-hook"},
    {"ClearEventLog", "clear-event-log"},
    {"CreateCompatibleBitmap", "capture-screen"},
    {"EmptyClipboard", "set-clipboard-data"},
    {"ExitWindowsEx", "shutdown-system"},
    {"ExpandEnvironmentStrings", "get-environment-variable"},
    {"GetAsyncKeyState", "capture-keystrokes"},
    {"GetClipboardData", "get-clipboard-data"},
    {"GetComputerName", "get-system-attributes"},
    {"GetDIBits", "capture-screen"},
    {"GetEnvironmentStrings", "get-environment-variable"},
    {"GetEnvironmentVariable", "get-environment-variable"},
    {"GetKeyState", "capture-keystrokes"},
    {"GetKeyboardState", "capture-keystrokes"},
    {"GetLocalTime", "get-system-time"},
    {"GetNativeSystemInfo", "get-system-attributes"},
    {"GetSystemDirectory", "get-system-attributes"},
    {"GetSystemInfo", "get-system-attributes"},
    {"GetSystemMetrics", "get-system-attributes"},
    {"GetSystemTime", "get-system-time"},
    {"GetSystemTimeAsFileTime", "get-system-time"},
    {"GetVersion", "get-system-attributes"},
    {"GetVersionEx", "get-system-attributes"},
    {"GetWindowsDirectory", "get-system-attributes"},
    {"InitiateShutdown", "shutdown-system"},
    {"InitiateSystemShutdown", "shutdown-system"},
    {"InitiateSystemShutdownEx", "shutdown-system"},
    {"MapVirtualKey", "capture-keystrokes"},
    {"OpenClipboard", "get-clipboard-data"},
    {"SendInput", "simulate-input"},
    {"SetClipboardData", "set-clipboard-data"},
    {"SetEnvironmentVariable", "set-environment-variable"},
    {"SetLocalTime", "set-system-time"},
    {"SetSystemTime", "set-system-time"},
    {"SetWindowsHookEx", "add-windows-hook"},
    {"UnhookWindowsHookEx", "add-windows-hook"},
    {"keybd_event", "simulate-input"},
    {"mouse_event", "simulate-input"},

    // ThreadHandling
    {"CreateRemoteThread", "create-remote-thread"},
    {"CreateRemoteThreadEx", "create-remote-thread"},
    {"CreateThread", "create-thread"},
    {"GetThreadContext", "get-thread-context"},
    {"NtCreateThreadEx", "create-remote-thread"},
    {"NtQueueApcThread", "queue-apc"},
    {"NtResumeThread", "resume-thread"},
    {"NtSuspendThread", "suspend-thread"},
    {"QueueUserAPC", "queue-apc"},
    {"ResumeThread", "resume-thread"},
    {"RtlCreateUserThread", "create-remote-thread"},
    {"SetThreadContext", "set-thread-context"},
    {"SuspendThread", "suspend-thread"},
    {"TerminateThread", "terminate-thread"},
    {"Thread32First", "enumerate-threads"},
    {"Thread32Next", "enumerate-threads"},
    {"Wow64GetThreadContext", "get-thread-context"},
    {"Wow64SetThreadContext", "set-thread-context"},
    {"Wow64SuspendThread", "suspend-thread"},

    // WindowHandling
    {"CloseWindow", "destroy-window"},
    {"CreateDialogIndirectParam", "create-dialog-box"},
    {"CreateDialogParam", "create-dialog-box"},
    {"CreateWindow", "create-window"},
    {"CreateWindowEx", "create-window"},
    {"DestroyWindow", "destroy-window"},
    {"DialogBox", "create-dialog-box"},
    {"DialogBoxIndirectParam", "create-dialog-box"},
    {"DialogBoxParam", "create-dialog-box"},
    {"EnumChildWindows", "enumerate-windows"},
    {"EnumDesktopWindows", "enumerate-windows"},
    {"EnumThreadWindows", "enumerate-windows"},
    {"EnumWindows", "enumerate-windows"},
    {"FindWindow", "find-window"},
    {"FindWindowEx", "find-window"},
    {"GetActiveWindow", "get-foreground-window"},
    {"GetForegroundWindow", "get-foreground-window"},
    {"GetWindowText", "get-window-text"},
    {"GetWindowTextLength", "get-window-text"},
    {"InternalGetWindowText", "get-window-text"},
    {"MessageBox", "create-dialog-box"},
    {"MessageBoxEx", "create-dialog-box"},
    {"MessageBoxIndirect", "create-dialog-box"},
    {"PostMessage", "send-window-message"},
    {"PostThreadMessage", "send-window-message"},
    {"RegisterClass", "create-window"},
    {"RegisterClassEx", "create-window"},
    {"SendMessage", "send-window-message"},
    {"SendMessageTimeout", "send-window-message"},
    {"ShowWindow", "show-window"},
    {"ShowWindowAsync", "show-window"},
};

constexpr Entry kActionToCategory[] = {
    {"add-user", "AccessManagement"},
    {"enumerate-users", "AccessManagement"},
    {"impersonate-user", "AccessManagement"},
    {"logon-user", "AccessManagement"},
    {"modify-access-privileges", "AccessManagement"},
    {"remove-user", "AccessManagement"},

    {"check-for-debugger", "AntiDebugging"},
    {"debug-process", "AntiDebugging"},

    {"acquire-crypto-context", "Cryptography"},
    {"decrypt", "Cryptography"},
    {"encrypt", "Cryptography"},
    {"generate-key", "Cryptography"},
    {"generate-random", "Cryptography"},
    {"hash-data", "Cryptography"},

    {"create-directory", "DirectoryHandling"},
    {"delete-directory", "DirectoryHandling"},
    {"get-current-directory", "DirectoryHandling"},
    {"set-current-directory", "DirectoryHandling"},

    {"enumerate-disks", "DiskManagement"},
    {"get-disk-attributes", "DiskManagement"},
    {"mount-disk", "DiskManagement"},
    {"unmount-disk", "DiskManagement"},

    {"copy-file", "FileHandling"},
    {"create-file", "FileHandling"},
    {"delete-file", "FileHandling"},
    {"find-file", "FileHandling"},
    {"get-file-attributes", "FileHandling"},
    {"lock-file", "FileHandling"},
    {"map-file-into-memory", "FileHandling"},
    {"modify-file-attributes", "FileHandling"},
    {"move-file", "FileHandling"},
    {"read-from-file", "FileHandling"},
    {"unlock-file", "FileHandling"},
    {"write-to-file", "FileHandling"},

    {"connect-to-named-pipe", "InterProcessCommunication"},
    {"create-named-pipe", "InterProcessCommunication"},
    {"transact-named-pipe", "InterProcessCommunication"},

    {"enumerate-libraries", "LibraryHandling"},
    {"free-library", "LibraryHandling"},
    {"get-function-address", "LibraryHandling"},
    {"load-library", "LibraryHandling"},

    {"accept-socket-connection", "Networking"},
    {"bind-address-to-socket", "Networking"},
    {"close-socket", "Networking"},
    {"connect-to-socket", "Networking"},
    {"connect-to-url", "Networking"},
    {"create-socket", "Networking"},
    {"download-file", "Networking"},
    {"listen-on-socket", "Networking"},
    {"read-from-url", "Networking"},
    {"receive-data-on-socket", "Networking"},
    {"send-data-on-socket", "Networking"},
    {"send-dns-query", "Networking"},
    {"send-ftp-command", "Networking"},
    {"send-http-request", "Networking"},
    {"send-icmp-request", "Networking"},

    {"allocate-process-virtual-memory", "ProcessHandling"},
    {"create-process", "ProcessHandling"},
    {"enumerate-processes", "ProcessHandling"},
    {"free-process-virtual-memory", "ProcessHandling"},
    {"get-process-attributes", "ProcessHandling"},
    {"kill-process", "ProcessHandling"},
    {"modify-process-virtual-memory-protection", "ProcessHandling"},
    {"open-process", "ProcessHandling"},
    {"open-process-token", "ProcessHandling"},
    {"query-process-virtual-memory", "ProcessHandling"},
    {"read-from-process-memory", "ProcessHandling"},
    {"sleep-process", "ProcessHandling"},
    {"write-to-process-memory", "ProcessHandling"},

    {"close-registry-key", "RegistryHandling"},
    {"create-registry-key", "RegistryHandling"},
    {"delete-registry-key", "RegistryHandling"},
    {"delete-registry-key-value", "RegistryHandling"},
    {"enumerate-registry-key-values", "RegistryHandling"},
    {"enumerate-registry-keys", "RegistryHandling"},
    {"load-registry-hive", "RegistryHandling"},
    {"modify-registry-key-value", "RegistryHandling"},
    {"monitor-registry-key", "RegistryHandling"},
    {"open-registry-key", "RegistryHandling"},
    {"read-registry-key-value", "RegistryHandling"},
    {"unload-registry-hive", "RegistryHandling"},

    {"add-network-share", "ResourceSharing"},
    {"connect-to-network-share", "ResourceSharing"},
    {"delete-network-share", "ResourceSharing"},
    {"disconnect-from-network-share", "ResourceSharing"},
    {"enumerate-network-shares", "ResourceSharing"},

    {"control-service", "ServiceHandling"},
    {"create-service", "ServiceHandling"},
    {"delete-service", "ServiceHandling"},
    {"enumerate-services", "ServiceHandling"},
    {"get-service-attributes", "ServiceHandling"},
    {"modify-service-configuration", "ServiceHandling"},
    {"open-service", "ServiceHandling"},
    {"start-service", "ServiceHandling"},

    {"create-critical-section", "SynchronizationPrimitivesHandling"},
    {"create-event", "SynchronizationPrimitivesHandling"},
    {"create-mutex", "SynchronizationPrimitivesHandling"},
    {"create-semaphore", "SynchronizationPrimitivesHandling"},
    {"delete-critical-section", "SynchronizationPrimitivesHandling"},
    {"enter-critical-section", "SynchronizationPrimitivesHandling"},
    {"open-event", "SynchronizationPrimitivesHandling"},
    {"open-mutex", "SynchronizationPrimitivesHandling"},
    {"open-semaphore", "SynchronizationPrimitivesHandling"},
    {"release-critical-section", "SynchronizationPrimitivesHandling"},
    {"release-mutex", "SynchronizationPrimitivesHandling"},
    {"release-semaphore", "SynchronizationPrimitivesHandling"},
    {"set-event", "SynchronizationPrimitivesHandling"},
    {"wait-for-object", "SynchronizationPrimitivesHandling"},

    {"add-windows-hook", "SystemManipulation"},
    {"capture-keystrokes", "SystemManipulation"},
    {"capture-screen", "SystemManipulation"},
    {"clear-event-log", "SystemManipulation"},
    {"get-clipboard-data", "SystemManipulation"},
    {"get-environment-variable", "SystemManipulation"},
    {"get-system-attributes", "SystemManipulation"},
    {"get-system-time", "SystemManipulation"},
    {"set-clipboard-data", "SystemManipulation"},
    {"set-environment-variable", "SystemManipulation"},
    {"set-system-time", "SystemManipulation"},
    {"shutdown-system", "SystemManipulation"},
    {"simulate-input", "SystemManipulation"},

    {"create-remote-thread", "ThreadHandling"},
    {"create-thread", "ThreadHandling"},
    {"enumerate-threads", "ThreadHandling"},
    {"get-thread-context", "ThreadHandling"},
    {"queue-apc", "ThreadHandling"},
    {"resume-thread", "ThreadHandling"},
    {"set-thread-context", "ThreadHandling"},
    {"suspend-thread", "ThreadHandling"},
    {"terminate-thread", "ThreadHandling"},

    {"create-dialog-box", "WindowHandling"},
    {"create-window", "WindowHandling"},
    {"destroy-window", "WindowHandling"},
    {"enumerate-windows", "WindowHandling"},
    {"find-window", "WindowHandling"},
    {"get-foreground-window", "WindowHandling"},
    {"get-window-text", "WindowHandling"},
    {"send-window-message", "WindowHandling"},
    {"show-window", "WindowHandling"},
};

}  // namespace

const ActionVocabulary& default_vocabulary() {
  static const ActionVocabulary vocab = [] {
    nlohmann::json doc;
    auto& api = doc["api_to_action"] = nlohmann::json::array();
    for (const auto& e : kApiToAction) api.push_back({e.key, e.value});
    auto& cat = doc["action_to_category"] = nlohmann::json::array();
    for (const auto& e : kActionToCategory) cat.push_back({e.key, e.value});
    return load_vocabulary(doc);
  }();
  return vocab;
}

}  // namespace peonto
