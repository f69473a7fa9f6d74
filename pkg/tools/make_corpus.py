"""Write corpus/corpus.xml, the bundled hand-written suite.

Every smell shows up at least three times; ``multi_smell_music`` carries six
different smells and ``nested_conditional_wifi`` has a conditional inside a
conditional.
"""

from pathlib import Path

from nltest.model import Sentence, Step, TestCase, TestSuite, validate
from nltest.xmlio import serialize_suite_xml


def s(*texts):
    return tuple(Sentence(t) for t in texts)


def test(test_id, steps, pre=()):
    return TestCase(test_id, tuple(pre), tuple(
        Step(i, s(*a), s(*v)) for i, (a, v) in enumerate(steps, start=1)
    ))


TESTS = [
    test("dash_applications", [
        (["Open the Dash"], ["The Dash opens"]),
        (["Open any application."], []),
    ]),
    test("notification_bubbles", [
        (["Open a terminal"], ["The terminal window appears"]),
        (["Run the notify-send command"], ["A notification bubble appears"]),
        (["Move the pointer over the bubble"], ["The bubble fades"]),
        (["Click the notification bubble"], ["The message view opens"]),
        (["Close the message view"], ["The message view disappears"]),
        (["Send a second notification"], ["The new message is shown"]),
        (["Click one more time on the same message"], []),
    ]),
    test("firefox_print", [
        (["Launch Firefox"], ["The Firefox window appears"]),
        (["Press Ctrl+P"], ["The print dialog is displayed"]),
        ([
            "Select the printer.",
            "Set the number of copies to 2.",
            "Choose the page range.",
            "Click Print.",
        ], ["A window opens, showing the progress of the print"]),
    ], pre=["This test will check that Firefox can print websites"]),
    test("printer_setup", [
        (["Open System Settings"], ["The settings window appears"]),
        ([
            "Click on 'Printers'",
            "If your printer doesn't show up, add it to the list (click Add and follow the wizard)",
        ], ["The printer is listed"]),
        (["Print a test page"], ["The test page is printed"]),
    ], pre=["A printer is connected"]),
    test("multi_smell_music", [
        (["Ensure that the speakers are connected", "Open Rhythmbox"], []),
        (["Select any song and press Play"],
         ["Verify that the song starts playing", "Click the Pause button"]),
        (["Click Next", "Verify that the next track is shown"], []),
    ]),
    test("nested_conditional_wifi", [
        (["Open the network menu"], ["The network menu appears"]),
        (["If a wireless network is available, connect to it"], ["The network icon changes"]),
        (["If the network requires a password, type the password"], ["The connection is established"]),
        (["Open a web page"], ["The page loads"]),
    ]),
    test("backup_copy", [
        (["Copy several files to the backup folder"], ["The files are copied correctly"]),
        (["Wait a few seconds"], ["The progress bar disappears"]),
    ]),
    test("settings_theme", [
        (["Open the Settings application"],
         ["Click on the Appearance tab", "The Appearance panel is shown"]),
        (["Select the dark theme"], ["The windows turn dark", "Close the Settings window"]),
    ]),
    test("login_screen", [
        (["Enter your password", "Confirm the dialog appears"], []),
        (["Press Enter", "Check that the desktop is shown"], ["The desktop loads"]),
    ]),
    test("bluetooth_pairing", [
        (["Make sure that Bluetooth is enabled", "Open the Bluetooth settings"],
         ["The device list appears"]),
        (["Click the Add Device button"], ["A pairing dialog opens"]),
    ]),
    test("webcam_preview", [
        (["You need a webcam connected to the computer", "Launch Cheese"],
         ["The webcam image is displayed"]),
        (["Click the Take a Photo button"], ["The photo appears in the gallery"]),
    ]),
    test("terminal_listing", [
        (["Open a terminal, type 'ls' and press Enter"], ["The directory listing is shown"]),
    ]),
    test("files_rename", [
        (["Open the Files application", "Create a new folder", "Rename the folder to 'test'"],
         ["The folder is renamed"]),
    ]),
    test("sound_headphones", [
        (["Open the Sound settings"], ["The Sound panel appears"]),
        (["Plug in headphones in case the speakers are muted"], ["Sound plays through the headphones"]),
    ]),
    test("second_monitor", [
        (["If a second monitor is attached, open the Displays settings"], ["Both monitors are listed"]),
    ]),
    test("calculator_sum", [
        (["Open the Calculator"], ["The Calculator window appears"]),
        (["Type 2+2"], ["The result 4 is displayed"]),
    ]),
    test("text_editor_save", [
        (["Launch the text editor"], ["An empty document is shown"]),
        (["Type 'hello'"], ["The text appears in the document"]),
        (["Save the document as 'hello.txt'"], ["The title bar shows 'hello.txt'"]),
    ]),
    test("reboot_login", [
        (["Reboot the computer"], []),
        (["Log in to the desktop"], []),
        (["Open the System Monitor"], ["The System Monitor window appears"]),
    ]),
    test("video_playback", [
        (["Play the video file"], ["The video plays smoothly"]),
        (["Drag the slider quickly to the end"], ["The video stops"]),
    ]),
    test("printer_panel_notes", [
        (["Open the Printers panel"], ["If a printer is installed, it is listed"]),
        (["Click Cancel when the dialog appears"], ["The dialog closes"]),
    ]),
    test("software_search", [
        (["Open the Software center"], ["Search for 'GIMP'", "The search results are shown"]),
        (["Click the Install button"], ["The installation starts"]),
    ]),
    test("system_upgrade", [
        (["This test requires a network connection", "Run the software updater"],
         ["The updater window appears"]),
        (["Install all updates"], []),
    ]),
]


def main():
    suite = TestSuite("corpus", tuple(TESTS))
    problems = validate(suite)
    if problems:
        raise SystemExit("\n".join(problems))
    out = Path(__file__).resolve().parent.parent / "corpus" / "corpus.xml"
    out.write_bytes(serialize_suite_xml(suite))
    print(f"wrote {out} ({len(suite.tests)} tests)")


if __name__ == "__main__":
    main()
